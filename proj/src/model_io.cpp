#include "uitws/model_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "uitws/error.hpp"

namespace uitws {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_hex64(uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, v);
  return buf;
}

class ModelReader {
 public:
  ModelReader(std::istream& in, const std::string& path) : in_(in), path_(path) {}

  std::string next_line() {
    std::string line;
    if (!std::getline(in_, line))
      throw Error(ErrorKind::ModelVersion, path_ + ": truncated model file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::string expect_key(const std::string& key) {
    std::string line = next_line();
    std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) != 0)
      throw Error(ErrorKind::ModelVersion,
                  path_ + ": expected \"" + key + ":\" line, got \"" + line + "\"");
    return line.substr(prefix.size());
  }

  uint64_t expect_count(const std::string& key) {
    std::string value = expect_key(key);
    char* end = nullptr;
    uint64_t n = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
      throw Error(ErrorKind::ModelVersion, path_ + ": bad count for " + key);
    return n;
  }

  void expect_section(const std::string& name) {
    std::string line = next_line();
    if (line != "[" + name + "]")
      throw Error(ErrorKind::ModelVersion,
                  path_ + ": expected section [" + name + "], got \"" + line + "\"");
  }

  const std::string& path() const { return path_; }

 private:
  std::istream& in_;
  std::string path_;
};

double parse_double(const std::string& s, const std::string& path) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw Error(ErrorKind::ModelVersion, path + ": bad numeric field \"" + s + "\"");
  return v;
}

}  // namespace

void write_model(const LinearModel& model, std::ostream& out) {
  if (model.vocab.size() == 0)
    throw Error(ErrorKind::BadInput, "refusing to save a model with an empty vocabulary");
  if (model.weights.size() != model.vocab.size())
    throw Error(ErrorKind::BadInput, "weight/vocabulary size mismatch");

  out << kModelMagic << "\n";
  out << "c: " << fmt_double(model.C) << "\n";
  out << "loss: " << to_string(model.loss) << "\n";
  out << "features: " << model.config.to_string() << "\n";
  out << "lexicon_id: " << fmt_hex64(model.lexicon_id) << "\n";
  out << "separable: " << model.stats.separable.size() << "\n";
  out << "suffixes: " << model.stats.suffixes.size() << "\n";
  out << "family_names: " << model.names.family_names.size() << "\n";
  out << "middle_names: " << model.names.middle_names.size() << "\n";
  out << "vocab: " << model.vocab.size() << "\n";

  out << "[separable]\n";
  for (const std::string& s : model.stats.separable) out << s << "\n";
  out << "[suffixes]\n";
  for (const std::string& s : model.stats.suffixes) out << s << "\n";
  // Unordered name sets are emitted sorted to keep the file reproducible.
  out << "[family_names]\n";
  for (const std::string& s : std::set<std::string>(model.names.family_names.begin(),
                                                    model.names.family_names.end()))
    out << s << "\n";
  out << "[middle_names]\n";
  for (const std::string& s : std::set<std::string>(model.names.middle_names.begin(),
                                                    model.names.middle_names.end()))
    out << s << "\n";
  out << "[weights]\n";
  for (size_t i = 0; i < model.vocab.size(); ++i)
    out << model.vocab.name(static_cast<int32_t>(i)) << "\t"
        << fmt_double(model.weights[i]) << "\n";
}

void save_model(const LinearModel& model, const std::string& path) {
  std::ostringstream buf;
  write_model(model, buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::ResourceIO, "cannot open " + path + " for writing");
  out << buf.str();
  if (!out.flush())
    throw Error(ErrorKind::ResourceIO, "failed writing model to " + path);
}

LinearModel read_model(std::istream& in, const std::string& path) {
  ModelReader reader(in, path);

  std::string magic = reader.next_line();
  if (magic != kModelMagic)
    throw Error(ErrorKind::ModelVersion,
                path + ": not a UITWS model (or unsupported version): \"" + magic + "\"");

  LinearModel model;
  model.C = parse_double(reader.expect_key("c"), path);
  model.loss = parse_loss(reader.expect_key("loss"));
  model.config = FeatureConfig::parse(reader.expect_key("features"));
  {
    std::string hex = reader.expect_key("lexicon_id");
    char* end = nullptr;
    model.lexicon_id = std::strtoull(hex.c_str(), &end, 16);
    if (end == hex.c_str() || *end != '\0')
      throw Error(ErrorKind::ModelVersion, path + ": bad lexicon_id");
  }
  uint64_t n_sep = reader.expect_count("separable");
  uint64_t n_sfx = reader.expect_count("suffixes");
  uint64_t n_fam = reader.expect_count("family_names");
  uint64_t n_mid = reader.expect_count("middle_names");
  uint64_t n_vocab = reader.expect_count("vocab");
  if (n_vocab == 0)
    throw Error(ErrorKind::ModelVersion, path + ": empty vocabulary");

  reader.expect_section("separable");
  for (uint64_t i = 0; i < n_sep; ++i) model.stats.separable.insert(reader.next_line());
  reader.expect_section("suffixes");
  for (uint64_t i = 0; i < n_sfx; ++i) model.stats.suffixes.insert(reader.next_line());
  reader.expect_section("family_names");
  for (uint64_t i = 0; i < n_fam; ++i) model.names.family_names.insert(reader.next_line());
  reader.expect_section("middle_names");
  for (uint64_t i = 0; i < n_mid; ++i) model.names.middle_names.insert(reader.next_line());

  reader.expect_section("weights");
  model.weights.reserve(n_vocab);
  for (uint64_t i = 0; i < n_vocab; ++i) {
    std::string line = reader.next_line();
    size_t tab = line.rfind('\t');
    if (tab == std::string::npos)
      throw Error(ErrorKind::ModelVersion, path + ": malformed weight line " +
                                               std::to_string(i + 1));
    model.vocab.push_name(line.substr(0, tab));
    model.weights.push_back(parse_double(line.substr(tab + 1), path));
  }
  model.vocab.freeze();
  return model;
}

LinearModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ResourceIO, "cannot open model file " + path);
  return read_model(in, path);
}

}  // namespace uitws
