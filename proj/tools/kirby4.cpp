// Command-line front end. Talks to the library only through kirby4.h.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kirby4/kirby4.h"

namespace {

using Json = nlohmann::json;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(kirby4_status s) {
  switch (s) {
    case KIRBY4_INTERNAL_INVARIANT_VIOLATION:
    case KIRBY4_RESOURCE_LIMIT:
    case KIRBY4_OUT_OF_MEMORY:
    case KIRBY4_UNEXPECTED:
      return 2;
    default:
      return 1;
  }
}

void check(kirby4_status s, const std::string& context) {
  if (s == KIRBY4_OK) return;
  std::string msg = kirby4_last_error_message();
  if (!context.empty()) msg = context + ": " + msg;
  throw Failure{exit_code_for(s), msg + " [" + kirby4_status_name(s) + "]"};
}

Json take_json(char* s) {
  std::unique_ptr<char, void (*)(char*)> guard(s, kirby4_string_free);
  return Json::parse(s);
}

using Link = std::unique_ptr<kirby4_link, void (*)(kirby4_link*)>;
using Matrix = std::unique_ptr<kirby4_matrix, void (*)(kirby4_matrix*)>;

struct Input {
  std::string path;
  std::string text;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Failure{2, "sha256 failed"};
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

class Session {
 public:
  std::vector<Input> inputs;

  const Input& read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{1, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    inputs.push_back({path, ss.str()});
    return inputs.back();
  }

  Link link(const std::string& path) {
    const Input& in = read(path);
    kirby4_link* out = nullptr;
    check(kirby4_link_parse(in.text.data(), in.text.size(), &out), path);
    return Link(out, kirby4_link_free);
  }

  Matrix matrix(const std::string& path) {
    const Input& in = read(path);
    kirby4_matrix* out = nullptr;
    check(kirby4_matrix_parse(in.text.data(), in.text.size(), &out), path);
    return Matrix(out, kirby4_matrix_free);
  }
};

uint64_t max_candidates() {
  const char* env = std::getenv("KIRBY4_MAX_ENUM");
  if (!env || !*env) return KIRBY4_UNLIMITED;
  const std::string s = env;
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
    throw Failure{1, "KIRBY4_MAX_ENUM must be a non-negative integer"};
  }
  return std::stoull(s);
}

// ---- text rendering

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string rows_text(const Json& rows, const std::string& indent = "") {
  std::size_t width = 1;
  for (const auto& r : rows)
    for (const auto& v : r) width = std::max(width, cell(v).size());
  std::string out;
  for (const auto& r : rows) {
    out += indent;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const std::string c = cell(r[j]);
      out += std::string(width - c.size() + (j ? 1 : 0), ' ') + c;
    }
    out += '\n';
  }
  if (rows.empty()) out += indent + "(empty)\n";
  return out;
}

std::string vector_text(const Json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + cell(v[i]);
  return out + ")";
}

std::string form_class_text(const Json& f) {
  return "rank " + f["rank"].dump() + ", signature " + f["signature"].dump() + ", " +
         f["parity"].get<std::string>() + ", " + f["definiteness"].get<std::string>();
}

std::string invariants_text(const Json& m, const std::string& indent = "") {
  std::string out;
  out += indent + "form          " + form_class_text(m["form_class"]) + "\n";
  out += rows_text(m["form"]["entries"], indent + "  ");
  out += indent + "c             " + vector_text(m["characteristic"]) + "\n";
  out += indent + "c.c           " + cell(m["characteristic_square"]) + "\n";
  if (m["smooth_assumed"].get<bool>()) {
    out += indent + "ks            0 (smooth, assumed)\n";
  } else {
    out += indent + "knot          " + m["knot_crossings"].dump() + " crossings, determinant " +
           cell(m["knot_determinant"]) + ", Arf " + m["arf"].dump() + "\n";
    out += indent + "ks            " + m["ks"].dump() + "\n";
  }
  return out;
}

std::string verdict_line(const Json& v) {
  return std::string(v["homeomorphic"].get<bool>() ? "homeomorphic" : "not homeomorphic") + " (" +
         v["reason"].get<std::string>() + (v["oriented"].get<bool>() ? ", orientation-preserving" : ", either orientation") +
         (v["smooth"].get<bool>() ? ", smooth assumed" : "") + ")";
}

std::string verdict_text(const Json& v) {
  std::string out = verdict_line(v) + "\n";
  out += "left\n" + invariants_text(v["left"], "  ");
  out += "right\n" + invariants_text(v["right"], "  ");
  if (!v["witness"].is_null()) out += "witness A with A^T V A = V'\n" + rows_text(v["witness"], "  ");
  return out;
}

// ---- commands

struct Outcome {
  Json result;
  std::string text;
  int exit_code = 0;
};

Outcome cmd_lkmatrix(Session& s, const std::string& file) {
  const Link link = s.link(file);
  kirby4_matrix* raw = nullptr;
  check(kirby4_linking_matrix(link.get(), &raw), file);
  const Matrix m(raw, kirby4_matrix_free);
  char* json = nullptr;
  check(kirby4_matrix_to_json(m.get(), &json), file);
  Outcome o;
  o.result = take_json(json);
  o.text = rows_text(o.result["entries"]);
  return o;
}

Outcome cmd_classify(Session& s, const std::string& file) {
  const Matrix m = s.matrix(file);
  char* json = nullptr;
  check(kirby4_classify_form(m.get(), &json), file);
  Outcome o;
  o.result = take_json(json);
  o.text = form_class_text(o.result) + "\n";
  return o;
}

Outcome cmd_form_compare(Session& s, const std::string& a, const std::string& b) {
  const Matrix ma = s.matrix(a);
  const Matrix mb = s.matrix(b);
  char* json = nullptr;
  check(kirby4_compare_forms(ma.get(), mb.get(), max_candidates(), &json), "");
  Outcome o;
  o.result = take_json(json);
  o.text = std::string(o.result["congruent"].get<bool>() ? "congruent" : "not congruent") + "\n";
  o.text += "left   " + form_class_text(o.result["left"]) + "\nright  " + form_class_text(o.result["right"]) + "\n";
  if (!o.result["witness"].is_null()) o.text += "witness A with A^T V A = W\n" + rows_text(o.result["witness"], "  ");
  return o;
}

Outcome cmd_charvec(Session& s, const std::string& file) {
  const Matrix m = s.matrix(file);
  char* json = nullptr;
  check(kirby4_characteristic_vector(m.get(), &json), file);
  Outcome o;
  o.result = take_json(json);
  o.text = "c = " + vector_text(o.result["characteristic"]) + "\n";
  return o;
}

Outcome cmd_arf(Session& s, const std::string& file) {
  const Link k = s.link(file);
  char* json = nullptr;
  check(kirby4_arf(k.get(), &json), file);
  Outcome o;
  o.result = take_json(json);
  std::string poly;
  for (const auto& c : o.result["alexander"]) poly += (poly.empty() ? "" : " ") + cell(c);
  o.text = "Alexander coefficients (t^0 up)  " + poly + "\ndeterminant  " + cell(o.result["determinant"]) +
           "\nArf          " + o.result["arf"].dump() + "\n";
  return o;
}

Outcome cmd_ks(Session& s, const std::string& file, bool smooth) {
  const Link l = s.link(file);
  char* json = nullptr;
  check(kirby4_invariants(l.get(), smooth ? 1 : 0, &json), file);
  Outcome o;
  o.result = take_json(json);
  o.text = invariants_text(o.result);
  return o;
}

Outcome cmd_homeo(Session& s, const std::string& a, const std::string& b, unsigned flags) {
  const Link la = s.link(a);
  const Link lb = s.link(b);
  char* json = nullptr;
  check(kirby4_homeomorphic(la.get(), lb.get(), flags, max_candidates(), &json), "");
  Outcome o;
  o.result = take_json(json);
  o.text = verdict_text(o.result);
  return o;
}

// One line "left<TAB>right" per pair; relative paths are taken from the
// directory of the list. Blank lines and lines starting with # are skipped.
Outcome cmd_batch(Session& s, const std::string& list, unsigned flags) {
  const std::string text = s.read(list).text;
  const std::filesystem::path base = std::filesystem::path(list).parent_path();
  Outcome o;
  o.result = Json::array();
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw Failure{1, list + ":" + std::to_string(number) + ": expected two tab-separated paths"};
    auto resolve = [&](const std::string& p) {
      const std::filesystem::path path(p);
      return (path.is_absolute() ? path : base / path).string();
    };
    const std::string a = resolve(line.substr(0, tab)), b = resolve(line.substr(tab + 1));
    Json entry;
    entry["left"] = a;
    entry["right"] = b;
    try {
      const Outcome one = cmd_homeo(s, a, b, flags);
      entry["verdict"] = one.result;
      o.text += a + "\t" + b + "\t" + verdict_line(one.result) + "\n";
    } catch (const Failure& f) {
      entry["error"] = f.message;
      o.exit_code = std::max(o.exit_code, f.exit_code);
      o.text += a + "\t" + b + "\terror: " + f.message + "\n";
    }
    o.result.push_back(std::move(entry));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide homeomorphism of closed simply connected 4-manifolds given by Kirby diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, report = false;
  app.add_flag("--json", json, "print the result as canonical JSON");
  app.add_flag("--report", report, "print a run report: command, input hashes, result, duration");

  std::string file_a, file_b, batch;
  bool unoriented = false, smooth = false;

  auto* lk = app.add_subcommand("lkmatrix", "linking matrix of a framed link");
  lk->add_option("link", file_a, "framed link file")->required();
  auto* cl = app.add_subcommand("classify", "rank, signature, parity and definiteness of a form");
  cl->add_option("matrix", file_a, "matrix file")->required();
  auto* fc = app.add_subcommand("form-compare", "decide congruence of two unimodular forms");
  fc->add_option("matrix1", file_a, "matrix file")->required();
  fc->add_option("matrix2", file_b, "matrix file")->required();
  auto* cv = app.add_subcommand("charvec", "characteristic vector of a unimodular form");
  cv->add_option("matrix", file_a, "matrix file")->required();
  auto* arf = app.add_subcommand("arf", "Alexander polynomial, determinant and Arf invariant of a knot");
  arf->add_option("knot", file_a, "single-component link file")->required();
  auto* ks = app.add_subcommand("ks", "intersection form and Kirby-Siebenmann invariant");
  ks->add_option("link", file_a, "framed link file")->required();
  ks->add_flag("--smooth", smooth, "assume a smooth manifold and skip the Arf computation");
  auto* ho = app.add_subcommand("homeo", "decide whether two Kirby diagrams give homeomorphic manifolds");
  ho->add_option("link1", file_a, "framed link file");
  ho->add_option("link2", file_b, "framed link file");
  ho->add_flag("--unoriented", unoriented, "also allow orientation-reversing homeomorphisms");
  ho->add_flag("--smooth", smooth, "assume both manifolds smooth");
  ho->add_option("--batch", batch, "file of tab-separated link pairs");

  try {
    app.parse(argc, argv);
    if (ho->parsed() && batch.empty() == (file_a.empty() || file_b.empty())) {
      throw CLI::ValidationError("homeo needs either two link files or --batch");
    }
    if (ho->parsed() && !batch.empty() && !file_a.empty()) {
      throw CLI::ValidationError("homeo takes link files or --batch, not both");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "kirby4: " << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  Session session;
  Outcome out;
  std::string command;
  try {
    const unsigned flags = (unoriented ? KIRBY4_UNORIENTED : 0u) | (smooth ? KIRBY4_SMOOTH : 0u);
    if (lk->parsed()) command = "lkmatrix", out = cmd_lkmatrix(session, file_a);
    else if (cl->parsed()) command = "classify", out = cmd_classify(session, file_a);
    else if (fc->parsed()) command = "form-compare", out = cmd_form_compare(session, file_a, file_b);
    else if (cv->parsed()) command = "charvec", out = cmd_charvec(session, file_a);
    else if (arf->parsed()) command = "arf", out = cmd_arf(session, file_a);
    else if (ks->parsed()) command = "ks", out = cmd_ks(session, file_a, smooth);
    else if (!batch.empty()) command = "homeo", out = cmd_batch(session, batch, flags);
    else command = "homeo", out = cmd_homeo(session, file_a, file_b, flags);
  } catch (const Failure& f) {
    std::cerr << "kirby4: " << f.message << "\n";
    return f.exit_code;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (report) {
    Json r;
    r["command"] = command;
    r["duration_ms"] = static_cast<std::int64_t>(ms.count());
    r["inputs"] = Json::array();
    for (const auto& in : session.inputs) r["inputs"].push_back({{"path", in.path}, {"sha256", sha256_hex(in.text)}});
    r["result"] = out.result;
    std::cout << r.dump() << "\n";
  } else if (json) {
    if (out.result.is_array()) {
      for (const auto& line : out.result) std::cout << line.dump() << "\n";
    } else {
      std::cout << out.result.dump() << "\n";
    }
  } else {
    std::cout << out.text;
    if (out.exit_code) std::cerr << "kirby4: some pairs failed\n";
  }
  if (out.exit_code && (json || report)) std::cerr << "kirby4: some pairs failed\n";
  return out.exit_code;
}
