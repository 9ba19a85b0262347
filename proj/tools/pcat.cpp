// pcat: command line front end over the C interface.
//
// Exit codes: 0 success, 1 a requested check failed, 2 input error,
// 3 resource or budget exhaustion.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcat/pcat.h"

namespace {

using json = nlohmann::json;

constexpr int kCheckFailed = 1;
constexpr int kInputExit = 2;
constexpr int kResourceExit = 3;

struct Failure {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(pcat_status status) {
  const int code = status == PCAT_ERR_RESOURCE ? kResourceExit
                   : status == PCAT_ERR_INTERNAL ? 1
                                                 : kInputExit;
  throw Failure{code, pcat_last_error()};
}

void check(pcat_status status) {
  if (status != PCAT_OK) fail(status);
}

[[noreturn]] void input_error(const std::string& message) {
  throw Failure{kInputExit, message};
}

struct PartitionDeleter {
  void operator()(pcat_partition* p) const { pcat_partition_free(p); }
};
struct TruncationDeleter {
  void operator()(pcat_truncation* t) const { pcat_truncation_free(t); }
};
struct OracleDeleter {
  void operator()(pcat_oracle* o) const { pcat_oracle_free(o); }
};
struct MatrixDeleter {
  void operator()(pcat_matrix* m) const { pcat_matrix_free(m); }
};
struct ModelDeleter {
  void operator()(pcat_model* m) const { pcat_model_free(m); }
};
using PartitionPtr = std::unique_ptr<pcat_partition, PartitionDeleter>;
using TruncationPtr = std::unique_ptr<pcat_truncation, TruncationDeleter>;
using OraclePtr = std::unique_ptr<pcat_oracle, OracleDeleter>;
using MatrixPtr = std::unique_ptr<pcat_matrix, MatrixDeleter>;
using ModelPtr = std::unique_ptr<pcat_model, ModelDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  pcat_string_free(s);
  return out;
}

std::string text_of(const pcat_partition* p) {
  char* s = nullptr;
  check(pcat_partition_to_text(p, &s));
  return take_string(s);
}

std::string word_of(const pcat_partition* p) {
  char* s = nullptr;
  check(pcat_partition_to_word(p, &s));
  return take_string(s);
}

std::string group_word_of(const pcat_partition* p) {
  char* s = nullptr;
  check(pcat_partition_group_word(p, &s));
  return take_string(s);
}

const char* answer_text(pcat_answer a) {
  switch (a) {
    case PCAT_NO:
      return "no";
    case PCAT_YES:
      return "yes";
    case PCAT_UNKNOWN:
      break;
  }
  return "unknown";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

std::size_t to_size(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos == s.size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  input_error("bad " + what + " '" + s + "'");
}

// A partition argument: `k;l;...` text, a mnemonic, or a word.
PartitionPtr resolve_partition(const std::string& arg) {
  pcat_partition* p = nullptr;
  if (arg.find(';') != std::string::npos) {
    check(pcat_partition_parse(arg.c_str(), &p));
    return PartitionPtr(p);
  }
  if (pcat_partition_named(arg.c_str(), &p) == PCAT_OK) return PartitionPtr(p);
  const std::string named_error = pcat_last_error();
  if (pcat_partition_from_word(arg.c_str(), &p) == PCAT_OK) return PartitionPtr(p);
  input_error("'" + arg + "' is neither a partition text, a name nor a word (" +
              named_error + ")");
}

// --gens values: partition texts are taken whole, anything else is split on
// commas.
std::vector<PartitionPtr> resolve_generators(const std::vector<std::string>& args) {
  std::vector<PartitionPtr> out;
  for (const auto& arg : args) {
    if (arg.find(';') != std::string::npos) {
      out.push_back(resolve_partition(arg));
      continue;
    }
    for (const auto& item : split(arg, ','))
      if (!item.empty()) out.push_back(resolve_partition(item));
  }
  return out;
}

std::vector<const pcat_partition*> raw(const std::vector<PartitionPtr>& ps) {
  std::vector<const pcat_partition*> out;
  for (const auto& p : ps) out.push_back(p.get());
  return out;
}

std::string block_letter(std::uint32_t id) {
  if (id >= 1 && id <= 26) return std::string(1, static_cast<char>('a' + id - 1));
  return "[" + std::to_string(id) + "]";
}

struct Settings {
  bool json = false;
  std::size_t max_points = 6;
  std::size_t slack = 4;
  std::uint64_t budget = 2'000'000'000ULL;
  std::string cache;
};

void emit(const Settings& s, const json& j, const std::string& text) {
  if (s.json)
    std::cout << j.dump() << '\n';
  else
    std::cout << text;
}

// render

int run_render(const Settings& s, const std::string& arg) {
  const auto p = resolve_partition(arg);
  const std::size_t k = pcat_partition_upper_count(p.get());
  const std::size_t l = pcat_partition_lower_count(p.get());
  std::vector<std::uint32_t> blocks(k + l);
  check(pcat_partition_blocks(p.get(), blocks.data(), blocks.size()));

  std::size_t width = 2;
  for (std::size_t i = 1; i <= std::max(k, l); ++i)
    width = std::max(width, std::to_string(i).size() + 2);
  for (auto b : blocks) width = std::max(width, block_letter(b).size() + 1);
  auto cell = [&](const std::string& v) { return v + std::string(width - v.size(), ' '); };

  std::string upper_letters, lower_letters;
  std::ostringstream out;
  out << "upper  ";
  for (std::size_t i = 0; i < k; ++i) out << cell(std::to_string(i + 1));
  out << "\n       ";
  for (std::size_t i = 0; i < k; ++i) {
    out << cell(block_letter(blocks[i]));
    upper_letters += block_letter(blocks[i]);
  }
  out << "\nlower  ";
  for (std::size_t j = 0; j < l; ++j) out << cell(std::to_string(j + 1) + "'");
  out << "\n       ";
  for (std::size_t j = 0; j < l; ++j) {
    out << cell(block_letter(blocks[k + j]));
    lower_letters += block_letter(blocks[k + j]);
  }
  out << '\n';

  std::string rendered = out.str();
  std::string trimmed;
  for (const auto& line : split(rendered, '\n')) {
    auto end = line.find_last_not_of(' ');
    trimmed += (end == std::string::npos ? "" : line.substr(0, end + 1)) + '\n';
  }
  emit(s,
       {{"text", text_of(p.get())},
        {"upper", upper_letters},
        {"lower", lower_letters},
        {"blocks", pcat_partition_block_count(p.get())}},
       trimmed);
  return 0;
}

// op

int run_op(const Settings& s, const std::string& op, const std::vector<std::string>& args,
           const std::string& side, const std::string& direction) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      input_error("op " + op + " takes " + std::to_string(n) + " partition(s)");
  };
  pcat_partition* out = nullptr;
  std::optional<std::size_t> loops;
  if (op == "tensor") {
    need(2);
    const auto p = resolve_partition(args[0]);
    const auto q = resolve_partition(args[1]);
    check(pcat_tensor(p.get(), q.get(), &out));
  } else if (op == "compose") {
    need(2);
    const auto p = resolve_partition(args[0]);
    const auto q = resolve_partition(args[1]);
    std::size_t n = 0;
    check(pcat_compose(p.get(), q.get(), &out, &n));
    loops = n;
  } else if (op == "involute") {
    need(1);
    const auto p = resolve_partition(args[0]);
    check(pcat_involute(p.get(), &out));
  } else if (op == "rotate") {
    need(1);
    if (side != "left" && side != "right") input_error("--side must be left or right");
    if (direction != "up" && direction != "down") input_error("--dir must be up or down");
    const auto p = resolve_partition(args[0]);
    check(pcat_rotate(p.get(), side == "left" ? PCAT_LEFT : PCAT_RIGHT,
                      direction == "up" ? PCAT_UP : PCAT_DOWN, &out));
  } else {
    input_error("unknown operation '" + op + "'");
  }
  const PartitionPtr result(out);
  json j{{"partition", text_of(result.get())}};
  std::string text = text_of(result.get()) + '\n';
  if (loops) {
    j["loops"] = *loops;
    text += "loops: " + std::to_string(*loops) + '\n';
  }
  emit(s, j, text);
  return 0;
}

// word, singleleg

int run_word(const Settings& s, const std::string& arg, bool unreduced) {
  const auto p = resolve_partition(arg);
  const std::string w = unreduced ? word_of(p.get()) : group_word_of(p.get());
  emit(s, {{"partition", text_of(p.get())}, {"word", w}, {"reduced", !unreduced}}, w + '\n');
  return 0;
}

int run_singleleg(const Settings& s, const std::string& arg) {
  const auto p = resolve_partition(arg);
  pcat_partition* out = nullptr;
  check(pcat_single_leg_version(p.get(), &out));
  const PartitionPtr sl(out);
  const std::string w = word_of(sl.get());
  emit(s, {{"partition", text_of(sl.get())}, {"word", w}}, w + '\n');
  return 0;
}

// closure and friends

std::string cache_path(const Settings& s, const std::string& signature) {
  if (!s.cache.empty()) return s.cache;
  const char* dir = std::getenv("PCAT_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream name;
  name << std::string(dir) << "/closure-" << std::hex << std::hash<std::string>{}(signature)
       << ".txt";
  return name.str();
}

struct ClosureRun {
  TruncationPtr truncation;
  std::string cache_status;  // "", "loaded", "written"
};

ClosureRun closure_for(const Settings& s, const std::vector<PartitionPtr>& gens,
                       std::size_t max_points) {
  std::string signature = "generators=";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) signature += '|';
    signature += text_of(gens[i].get());
  }
  signature += ";N=" + std::to_string(max_points) + ";slack=" + std::to_string(s.slack);

  ClosureRun run;
  const std::string path = cache_path(s, signature);
  if (!path.empty() && std::filesystem::exists(path)) {
    pcat_truncation* t = nullptr;
    check(pcat_truncation_load(path.c_str(), &t));
    TruncationPtr loaded(t);
    char* header = nullptr;
    check(pcat_truncation_header(loaded.get(), &header));
    if (take_string(header) == signature + ";saturated=true") {
      run.truncation = std::move(loaded);
      run.cache_status = "loaded";
      return run;
    }
  }
  const auto ptrs = raw(gens);
  pcat_truncation* t = nullptr;
  check(pcat_closure(ptrs.data(), ptrs.size(), max_points, s.slack, s.budget, &t));
  run.truncation.reset(t);
  if (!path.empty() && pcat_truncation_saturated(t)) {
    check(pcat_truncation_save(t, path.c_str()));
    run.cache_status = "written";
  }
  return run;
}

int run_closure(const Settings& s, const std::vector<std::string>& gen_args, bool list) {
  const auto gens = resolve_generators(gen_args);
  const auto run = closure_for(s, gens, s.max_points);
  const pcat_truncation* t = run.truncation.get();

  char* header = nullptr;
  check(pcat_truncation_header(t, &header));
  const std::string head = take_string(header);
  const std::size_t count = pcat_truncation_member_count(t);
  const bool saturated = pcat_truncation_saturated(t);

  json j{{"header", head},
         {"saturated", saturated},
         {"max_points", pcat_truncation_max_points(t)},
         {"slack", pcat_truncation_slack(t)},
         {"steps", pcat_truncation_steps(t)},
         {"member_count", count}};
  if (!run.cache_status.empty()) j["cache"] = run.cache_status;
  std::ostringstream text;
  text << head << '\n' << "members: " << count << '\n';
  if (list) {
    json members = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      pcat_partition* p = nullptr;
      check(pcat_truncation_member(t, i, &p));
      const PartitionPtr owned(p);
      const std::string pt = text_of(owned.get());
      members.push_back(pt);
      text << pt << '\n';
    }
    j["members"] = members;
  }
  if (!run.cache_status.empty()) std::cerr << "cache: " << run.cache_status << '\n';
  emit(s, j, text.str());
  return saturated ? 0 : kResourceExit;
}

int run_member(const Settings& s, const std::vector<std::string>& gen_args,
               const std::string& arg, const std::string& oracle_spec) {
  const auto gens = resolve_generators(gen_args);
  const auto p = resolve_partition(arg);
  const std::size_t points =
      pcat_partition_upper_count(p.get()) + pcat_partition_lower_count(p.get());
  const auto run = closure_for(s, gens, std::max(s.max_points, points));
  const pcat_truncation* t = run.truncation.get();

  pcat_answer in_closure = PCAT_UNKNOWN;
  check(pcat_member(t, p.get(), &in_closure));
  // Absence from a saturated truncation is reported as no.
  if (in_closure == PCAT_UNKNOWN && pcat_truncation_saturated(t)) in_closure = PCAT_NO;

  json j{{"partition", text_of(p.get())},
         {"closure", answer_text(in_closure)},
         {"saturated", static_cast<bool>(pcat_truncation_saturated(t))}};
  std::string text = std::string("closure: ") + answer_text(in_closure) + '\n';
  if (!oracle_spec.empty()) {
    pcat_oracle* o = nullptr;
    check(pcat_oracle_new(oracle_spec.c_str(), &o));
    const OraclePtr oracle(o);
    pcat_answer in_h = PCAT_UNKNOWN;
    check(pcat_oracle_contains_partition(oracle.get(), p.get(), &in_h));
    j["oracle"] = answer_text(in_h);
    text += std::string("oracle: ") + answer_text(in_h) + '\n';
  }
  emit(s, j, text);
  return pcat_truncation_saturated(t) ? 0 : kResourceExit;
}

int run_sl(const Settings& s, const std::vector<std::string>& gen_args) {
  const auto gens = resolve_generators(gen_args);
  const auto run = closure_for(s, gens, s.max_points);
  const pcat_truncation* t = run.truncation.get();
  const std::size_t count = pcat_truncation_sl_count(t);
  json words = json::array();
  std::string text;
  for (std::size_t i = 0; i < count; ++i) {
    pcat_partition* p = nullptr;
    check(pcat_truncation_sl_member(t, i, &p));
    const PartitionPtr owned(p);
    const std::string w = word_of(owned.get());
    words.push_back(w);
    text += w + '\n';
  }
  emit(s, {{"saturated", static_cast<bool>(pcat_truncation_saturated(t))}, {"words", words}},
       text);
  return pcat_truncation_saturated(t) ? 0 : kResourceExit;
}

// tmap and models

int run_tmap(const Settings& s, const std::string& arg, std::size_t n, std::size_t budget) {
  const auto p = resolve_partition(arg);
  pcat_matrix* m = nullptr;
  check(pcat_tmap(p.get(), n, budget, &m));
  const MatrixPtr owned(m);
  char* text = nullptr;
  check(pcat_matrix_to_text(owned.get(), &text));
  const std::string body = take_string(text);
  emit(s,
       {{"partition", text_of(p.get())},
        {"rows", pcat_matrix_rows(owned.get())},
        {"cols", pcat_matrix_cols(owned.get())},
        {"matrix", body}},
       body);
  return 0;
}

std::map<std::string, std::string> model_fields(const std::string& body) {
  std::map<std::string, std::string> fields;
  for (const auto& part : split(body, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) input_error("model field '" + part + "' lacks '='");
    fields[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return fields;
}

std::string field(const std::map<std::string, std::string>& f, const std::string& key) {
  const auto it = f.find(key);
  if (it == f.end()) input_error("model spec needs '" + key + "='");
  return it->second;
}

// signed:perm=2,1;signs=+,-   perm:2,3,1   crossed:r=1;sigma=1,2;g=1,1
// matrix:n=2;entries=3/5,4/5,4/5,-3/5   file:PATH;n=2
ModelPtr resolve_model(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) input_error("model spec '" + spec + "' lacks a kind");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  pcat_model* m = nullptr;

  if (kind == "signed" || kind == "perm") {
    std::vector<std::size_t> sigma;
    std::vector<int> signs;
    const auto f = kind == "perm" ? std::map<std::string, std::string>{{"perm", body}}
                                  : model_fields(body);
    for (const auto& v : split(field(f, "perm"), ',')) sigma.push_back(to_size(v, "image"));
    if (kind == "signed") {
      for (const auto& v : split(field(f, "signs"), ',')) {
        if (v == "+" || v == "+1" || v == "1")
          signs.push_back(1);
        else if (v == "-" || v == "-1")
          signs.push_back(-1);
        else
          input_error("bad sign '" + v + "'");
      }
    } else {
      signs.assign(sigma.size(), 1);
    }
    if (signs.size() != sigma.size()) input_error("perm and signs differ in length");
    check(pcat_model_signed_permutation(sigma.data(), signs.data(), sigma.size(), &m));
  } else if (kind == "crossed") {
    const auto f = model_fields(body);
    const std::size_t r = to_size(field(f, "r"), "rank");
    if (r > 6) input_error("crossed models support r <= 6");
    const std::size_t order = std::size_t{1} << r;
    std::vector<std::size_t> table(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) table[a * order + b] = a ^ b;
    std::vector<std::size_t> sigma, g;
    for (const auto& v : split(field(f, "sigma"), ','))
      sigma.push_back(v == "_" ? 0 : to_size(v, "image"));
    for (const auto& v : split(field(f, "g"), ',')) g.push_back(to_size(v, "group element"));
    if (g.size() != sigma.size()) input_error("sigma and g differ in length");
    check(pcat_model_crossed(order, table.data(), 0, sigma.data(), g.data(), sigma.size(), &m));
  } else if (kind == "matrix" || kind == "file") {
    std::string text;
    std::size_t n = 0;
    if (kind == "matrix") {
      const auto f = model_fields(body);
      n = to_size(field(f, "n"), "n");
      const auto entries = split(field(f, "entries"), ',');
      std::size_t side = 0;
      while (side * side < entries.size()) ++side;
      if (side * side != entries.size()) input_error("matrix entries do not form a square");
      text = std::to_string(side) + " " + std::to_string(side);
      for (const auto& e : entries) text += " " + e;
    } else {
      const auto semi = body.rfind(";n=");
      if (semi == std::string::npos) input_error("file model needs ';n='");
      n = to_size(body.substr(semi + 3), "n");
      std::ifstream in(body.substr(0, semi));
      if (!in) input_error("cannot read model file '" + body.substr(0, semi) + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    pcat_matrix* raw_matrix = nullptr;
    check(pcat_matrix_parse(text.c_str(), &raw_matrix));
    const MatrixPtr matrix(raw_matrix);
    check(pcat_model_from_matrix(matrix.get(), n, &m));
  } else {
    input_error("unknown model kind '" + kind + "'");
  }
  return ModelPtr(m);
}

int run_intertwine(const Settings& s, const std::string& arg, const std::string& model_spec,
                   std::size_t budget) {
  const auto p = resolve_partition(arg);
  const auto m = resolve_model(model_spec);
  int result = 0;
  check(pcat_intertwines(p.get(), m.get(), budget, &result));
  emit(s, {{"partition", text_of(p.get())}, {"intertwines", static_cast<bool>(result)}},
       std::string(result ? "yes" : "no") + '\n');
  return 0;
}

int run_relcheck(const Settings& s, const std::string& model_spec, const std::string& arg,
                 const std::string& assign) {
  const auto m = resolve_model(model_spec);
  int relations = 0;
  check(pcat_relations_check(m.get(), &relations));
  json j{{"relations", static_cast<bool>(relations)}};
  std::string text = std::string("relations: ") + (relations ? "yes" : "no") + '\n';
  if (!arg.empty()) {
    const auto p = resolve_partition(arg);
    int ok = 0;
    if (assign.empty()) {
      check(pcat_word_projection_check_all(m.get(), p.get(), &ok));
    } else {
      std::vector<std::size_t> rows, cols;
      for (const auto& pair : split(assign, ',')) {
        const auto c = pair.find(':');
        if (c == std::string::npos) input_error("assignment entries look like i:j");
        rows.push_back(to_size(pair.substr(0, c), "row"));
        cols.push_back(to_size(pair.substr(c + 1), "column"));
      }
      check(pcat_word_projection_check(m.get(), p.get(), rows.data(), cols.data(),
                                       rows.size(), &ok));
    }
    j["word_projection"] = static_cast<bool>(ok);
    text += std::string("word-projection: ") + (ok ? "yes" : "no") + '\n';
  }
  emit(s, j, text);
  return 0;
}

int run_bijection(const Settings& s, const std::vector<std::string>& gen_args,
                  const std::string& oracle_spec, std::size_t max_l, std::size_t letters) {
  const auto gens = resolve_generators(gen_args);
  pcat_oracle* o = nullptr;
  check(pcat_oracle_new(oracle_spec.c_str(), &o));
  const OraclePtr oracle(o);
  const auto ptrs = raw(gens);
  pcat_bijection_report report{};
  char* first = nullptr;
  check(pcat_bijection_test(ptrs.data(), ptrs.size(), oracle.get(), max_l, s.slack, s.budget,
                            letters, &report, &first));
  const std::string first_text = take_string(first);
  json j{{"checked", report.checked},
         {"disagreements", report.disagreements},
         {"oracle_unknown", report.oracle_unknown},
         {"saturated", static_cast<bool>(report.saturated)}};
  std::ostringstream text;
  text << "checked: " << report.checked << '\n'
       << "disagreements: " << report.disagreements << '\n'
       << "oracle-unknown: " << report.oracle_unknown << '\n'
       << "saturated: " << (report.saturated ? "true" : "false") << '\n';
  if (!first_text.empty()) {
    j["first_disagreement"] = first_text;
    text << "first disagreement: " << first_text << '\n';
  }
  emit(s, j, text.str());
  if (!report.saturated) return kResourceExit;
  return report.disagreements ? kCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categories of partitions and their group words"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_flag("--json", s.json, "Machine-readable output");
  app.add_option("--max-points", s.max_points, "Largest partition kept in a truncation");
  app.add_option("--slack", s.slack, "Extra points allowed for intermediates");
  app.add_option("--budget", s.budget, "Step budget for closure computations");
  app.add_option("--cache", s.cache, "Closure cache file (default: $PCAT_CACHE_DIR)");

  std::string part, part2, side = "left", direction = "down", oracle, model, assign, op;
  std::vector<std::string> gens, op_args;
  bool unreduced = false, list = false;
  std::size_t n = 2, max_l = 6, letters = 0, entry_budget = 1'000'000;
  std::function<int()> action;

  auto* render = app.add_subcommand("render", "ASCII picture of a partition");
  render->add_option("partition", part)->required();
  render->callback([&] { action = [&] { return run_render(s, part); }; });

  auto* op_cmd = app.add_subcommand("op", "tensor, compose, involute or rotate");
  op_cmd->add_option("operation", op)->required();
  op_cmd->add_option("partitions", op_args)->required();
  op_cmd->add_option("--side", side, "left or right");
  op_cmd->add_option("--dir", direction, "up or down");
  op_cmd->callback([&] { action = [&] { return run_op(s, op, op_args, side, direction); }; });

  auto* word = app.add_subcommand("word", "Reduced group word of a partition");
  word->add_option("partition", part)->required();
  word->add_flag("--unreduced", unreduced, "Print the plain counterclockwise reading");
  word->callback([&] { action = [&] { return run_word(s, part, unreduced); }; });

  auto* singleleg = app.add_subcommand("singleleg", "Single leg version as a word");
  singleleg->add_option("partition", part)->required();
  singleleg->callback([&] { action = [&] { return run_singleleg(s, part); }; });

  auto* closure = app.add_subcommand("closure", "Truncated category generated by --gens");
  closure->add_option("--gens", gens, "Generators (comma separated or repeated)");
  closure->add_flag("--list", list, "Print every member");
  closure->callback([&] { action = [&] { return run_closure(s, gens, list); }; });

  auto* member = app.add_subcommand("member", "Closure and oracle membership of a partition");
  member->add_option("--gens", gens, "Generators (comma separated or repeated)");
  member->add_option("-p,--partition", part)->required();
  member->add_option("--oracle", oracle, "Subgroup oracle spec");
  member->callback([&] { action = [&] { return run_member(s, gens, part, oracle); }; });

  auto* sl = app.add_subcommand("sl", "Single leg members of a truncation");
  sl->add_option("--gens", gens, "Generators (comma separated or repeated)");
  sl->callback([&] { action = [&] { return run_sl(s, gens); }; });

  auto* tmap = app.add_subcommand("tmap", "Exact matrix T_p");
  tmap->add_option("partition", part)->required();
  tmap->add_option("-n,--n", n, "Dimension");
  tmap->add_option("--entry-budget", entry_budget, "Bound on n^max(k,l)");
  tmap->callback([&] { action = [&] { return run_tmap(s, part, n, entry_budget); }; });

  auto* intertwine = app.add_subcommand("intertwine", "Does T_p intertwine a matrix model");
  intertwine->add_option("partition", part)->required();
  intertwine->add_option("--model", model, "Model spec")->required();
  intertwine->add_option("--entry-budget", entry_budget, "Bound on n^max(k,l)");
  intertwine->callback(
      [&] { action = [&] { return run_intertwine(s, part, model, entry_budget); }; });

  auto* relcheck = app.add_subcommand("relcheck", "Local symmetry relations of a model");
  relcheck->add_option("--model", model, "Model spec")->required();
  relcheck->add_option("-p,--partition", part, "Single leg word partition to check");
  relcheck->add_option("--assign", assign, "Generator per letter, e.g. 1:2,2:1");
  relcheck->callback([&] { action = [&] { return run_relcheck(s, model, part, assign); }; });

  auto* bijection = app.add_subcommand("bijection-test", "Compare a closure with C_H");
  bijection->add_option("--gens", gens, "Generators (comma separated or repeated)");
  bijection->add_option("--oracle", oracle, "Subgroup oracle spec")->required();
  bijection->add_option("--max-l", max_l, "Largest number of points checked");
  bijection->add_option("--letters", letters, "Largest number of blocks checked (0 = all)");
  bijection->callback(
      [&] { action = [&] { return run_bijection(s, gens, oracle, max_l, letters); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputExit;
  }

  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
}
