#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qhg/constructions.hpp"
#include "qhg/duality.hpp"
#include "qhg/errors.hpp"
#include "qhg/json_io.hpp"

using namespace qhg;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

/// Wraps input problems so they map to exit code 2.
struct InputError : Error {
  using Error::Error;
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return "sha256:" + os.str();
}

std::string digest_of(const std::vector<std::string>& paths) {
  std::string all;
  for (const auto& p : paths) all += read_bytes(p);
  return sha256_hex(all);
}

Json parse_file(const std::string& path) {
  const std::string bytes = read_bytes(path);
  try {
    return Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text << '\n';
}

std::string type_name(const TypeFlags& t) {
  if (t.finite) return "finite";
  if (t.compact) return "compact";
  if (t.discrete) return "discrete";
  return "none";
}

std::string summary_line(const std::string& what, const QuantumHypergroup& h) {
  return what + ": dim=" + std::to_string(h.dim()) + " type=" + type_name(h.classify_type()) +
         " Δ-hom=" + (h.coproduct_is_homomorphism() ? "yes" : "no");
}

/// Coefficient form "c·label + ..." of an element; "0" when zero.
std::string format_element(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar c = v[i];
    const bool negative = c.is_real() && c.re() < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (!c.is_one()) out += (c.is_real() ? c.to_string() : "(" + c.to_string() + ")") + "·";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_matrix(const Matrix& m) {
  if (m == Matrix::identity(m.rows())) return "identity";
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

Vector normalized(Vector v) {
  for (const auto& s : v)
    if (!s.is_zero()) return (Scalar(1) / s) * v;
  return v;
}

Json checks_json(const Report& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks()) {
    Json rec{{"name", c.name}, {"anchor", c.anchor}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.witness.empty()) rec["witness"] = c.witness;
    arr.push_back(std::move(rec));
  }
  return arr;
}

Json derived_json(const HypergroupData& h, const DerivedData& d, const TypeFlags& t, bool hom) {
  Json cointegrals = Json::array();
  for (const auto& c : cointegral_space(h, Side::Left)) cointegrals.push_back(vector_to_json(normalized(c)));
  return Json{{"dim", h.dim()},
              {"labels", h.alg.labels()},
              {"antipode", matrix_to_json(d.antipode)},
              {"right_integral", vector_to_json(d.right_integral)},
              {"delta", vector_to_json(d.modular)},
              {"delta_inv", vector_to_json(d.modular_inv)},
              {"sigma", matrix_to_json(d.sigma)},
              {"sigma_prime", matrix_to_json(d.sigma_prime)},
              {"tau", scalar_to_json(d.scaling)},
              {"type", Json{{"compact", t.compact}, {"discrete", t.discrete}, {"finite", t.finite}}},
              {"coproduct_homomorphism", hom},
              {"left_cointegrals", std::move(cointegrals)}};
}

Json report_json(const std::string& command, const std::string& digest, const Report& r) {
  return Json{{"tool", "qhg"},
              {"version", kVersion},
              {"command", command},
              {"input_digest", digest},
              {"status", r.ok() ? "pass" : "fail"},
              {"checks", checks_json(r)}};
}

std::string resolve_path(const std::string& p) {
  if (std::filesystem::exists(p) || std::filesystem::exists(p + ".json") == false) return p;
  return p + ".json";
}

// --- commands ---------------------------------------------------------------

struct BuildArgs {
  std::string kind, group, subgroup, algebra, unit, out;
};

FiniteGroup load_group(const std::string& path) {
  if (path.empty()) throw InputError("--group is required");
  return group_from_json(parse_file(path));
}

Vector load_unit(const std::string& arg, const QuantumHypergroup& b) {
  if (arg.rfind("hecke:", 0) == 0) {
    const Json j = parse_file(resolve_path(arg.substr(6)));
    const auto& labels = b.alg().labels();
    std::vector<std::size_t> members;
    for (const auto& x : j.at("members")) {
      if (x.is_number_unsigned()) {
        members.push_back(x.get<std::size_t>());
        continue;
      }
      const std::string name = x.get<std::string>();
      auto it = std::find_if(labels.begin(), labels.end(), [&](const std::string& l) { return l == name || l == "λ" + name; });
      if (it == labels.end()) throw InputError("hecke unit: no basis element for '" + name + "'");
      members.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    Vector u(b.dim());
    for (std::size_t m : members) {
      if (m >= b.dim()) throw InputError("hecke unit: index out of range");
      u[m] = Scalar(1, static_cast<long>(members.size()));
    }
    return u;
  }
  return vector_from_json(parse_file(resolve_path(arg)), b.dim(), "unit");
}

int cmd_build(const BuildArgs& a) {
  std::optional<QuantumHypergroup> h;
  if (a.kind == "double-coset") {
    const FiniteGroup g = load_group(a.group);
    if (a.subgroup.empty()) throw InputError("--subgroup is required");
    h = double_coset_hypergroup(g, subgroup_members_from_json(parse_file(a.subgroup), g));
  } else if (a.kind == "group-algebra") {
    h = group_algebra_hopf(load_group(a.group));
  } else if (a.kind == "function-algebra") {
    h = function_algebra(load_group(a.group));
  } else if (a.kind == "compression") {
    if (a.algebra.empty() || a.unit.empty()) throw InputError("--algebra and --unit are required");
    const QuantumHypergroup b = QuantumHypergroup::create(hypergroup_data_from_json(parse_file(a.algebra)));
    h = group_like_projection_compression(b, load_unit(a.unit, b));
  } else if (a.kind == "sweedler") {
    h = sweedler_fixture();
  }
  emit(hypergroup_to_json(h->data()).dump(2), a.out);
  (a.out.empty() ? std::cerr : std::cout) << summary_line("hypergroup", *h) << '\n';
  return kPass;
}

int cmd_verify(const std::string& file, const std::string& level, const std::string& out) {
  const std::string digest = digest_of({file});
  const HypergroupData data = hypergroup_data_from_json(parse_file(file));
  PipelineResult res = run_pipeline(data, level == "axioms" ? Level::Axioms : Level::Derived);
  Report r = res.report;
  if (level == "full" && res.derived) r.append(full_duality_report(QuantumHypergroup::create(data)));
  Json j = report_json("verify", digest, r);
  j["level"] = level;
  if (res.derived) j["derived"] = derived_json(data, *res.derived, res.type, res.homomorphic);
  emit(j.dump(2), out);
  if (const auto* f = r.first_failure())
    std::cerr << "fail: " << f->name << " (" << f->anchor << ")" << (f->witness.empty() ? "" : ": " + f->witness) << '\n';
  return r.ok() ? kPass : kFail;
}

int cmd_dual(const std::string& file, const std::string& out) {
  const QuantumHypergroup h = QuantumHypergroup::create(hypergroup_data_from_json(parse_file(file)));
  const DualPackage p = build_dual(h);
  emit(hypergroup_to_json(p.dual.data(), p.pairing).dump(2), out);
  (out.empty() ? std::cerr : std::cout) << summary_line("dual", p.dual) << '\n';
  return kPass;
}

int cmd_bidual(const std::string& file, const std::string& out) {
  const std::string digest = digest_of({file});
  const QuantumHypergroup h = QuantumHypergroup::create(hypergroup_data_from_json(parse_file(file)));
  const DualPackage first = build_dual(h);
  const DualPackage second = build_dual(first.dual);
  const Report r = bidual_check(first, second);
  bool iso = true;
  for (const auto& c : r.checks())
    if (c.name != "bidual-integral") iso = iso && c.passed;
  const bool integral = r.passed("bidual-integral");
  std::cout << "Γ isomorphism: " << (iso ? "pass" : "fail") << "; φ̂̂∘Γ=φ: " << (integral ? "pass" : "fail") << '\n';
  if (!out.empty()) {
    Json j = report_json("bidual", digest, r);
    j["gamma"] = matrix_to_json(bidual_map(first, second));
    emit(j.dump(2), out);
  }
  return r.ok() ? kPass : kFail;
}

int cmd_report(const std::string& file, const std::string& out) {
  const QuantumHypergroup h = QuantumHypergroup::create(hypergroup_data_from_json(parse_file(file)));
  const DualPackage p = build_dual(h);
  const DerivedData& d = h.derived();
  const auto& labels = h.alg().labels();
  auto element = [&](const Vector& v) { return v == h.unit() ? std::string("1") : format_element(v, labels); };
  auto dual_element = [&](const Vector& w) {
    return w == p.dual.unit() ? std::string("1̂ (= ε)") : format_element(w, p.dual.alg().labels());
  };
  std::ostringstream os;
  os << summary_line("hypergroup", h) << '\n';
  os << "basis: ";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << "e" << i << "=" << labels[i];
  os << '\n';
  const TypeFlags t = h.classify_type();
  os << "type=" << type_name(t) << " (compact=" << (t.compact ? "yes" : "no") << ", discrete=" << (t.discrete ? "yes" : "no")
     << ")\n";
  os << "φ=" << format_element(h.left_integral(), labels) << '\n';
  os << "ψ=" << format_element(d.right_integral, labels) << '\n';
  os << "S=" << format_matrix(d.antipode) << '\n';
  os << "δ=" << element(d.modular) << '\n';
  os << "δ⁻¹=" << element(d.modular_inv) << '\n';
  os << "σ=" << format_matrix(d.sigma) << '\n';
  os << "σ′=" << format_matrix(d.sigma_prime) << '\n';
  os << "τ=" << d.scaling << '\n';
  os << "δ̂=" << dual_element(p.dual.derived().modular) << '\n';
  for (auto side : {Side::Left, Side::Right}) {
    os << (side == Side::Left ? "left" : "right") << " co-integrals:";
    for (const auto& c : cointegral_space(h.data(), side)) os << ' ' << format_element(normalized(c), labels);
    os << '\n';
  }
  os << "left integrals: " << integral_space(h.data(), Side::Left).size() << "-dimensional; right integrals: "
     << integral_space(h.data(), Side::Right).size() << "-dimensional\n";
  if (h.alg().has_star())
    os << "positivity: φ " << (integral_positivity(h.alg(), h.left_integral()) ? "positive" : "not positive") << ", ψ "
       << (integral_positivity(h.alg(), d.right_integral) ? "positive" : "not positive") << '\n';
  std::string text = os.str();
  text.pop_back();
  emit(text, out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-dimensional algebraic quantum hypergroups", "qhg"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  BuildArgs b;
  auto* build = app.add_subcommand("build", "Construct a hypergroup and write it as JSON");
  build->add_option("kind", b.kind, "double-coset | group-algebra | function-algebra | compression | sweedler")
      ->required()
      ->check(CLI::IsMember({"double-coset", "group-algebra", "function-algebra", "compression", "sweedler"}));
  build->add_option("--group", b.group, "Group JSON");
  build->add_option("--subgroup", b.subgroup, "Subgroup JSON");
  build->add_option("--algebra", b.algebra, "Hypergroup JSON to compress");
  build->add_option("--unit", b.unit, "hecke:<subgroup file> or a JSON coefficient list");
  build->add_option("--out", b.out, "Output file (default: stdout)");

  std::string file, level = "full", out;
  auto* verify = app.add_subcommand("verify", "Run the verification suite and print a JSON report");
  verify->add_option("file", file)->required();
  verify->add_option("--level", level)->check(CLI::IsMember({"axioms", "derived", "full"}));
  verify->add_option("--out", out);

  auto* dual = app.add_subcommand("dual", "Write the dual hypergroup with its pairing");
  dual->add_option("file", file)->required();
  dual->add_option("--out", out);

  auto* bidual = app.add_subcommand("bidual", "Check the biduality isomorphism");
  bidual->add_option("file", file)->required();
  bidual->add_option("--out", out, "Also write a JSON report");

  auto* report = app.add_subcommand("report", "Print the derived data");
  report->add_option("file", file)->required();
  report->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*build) return cmd_build(b);
    if (*verify) return cmd_verify(file, level, out);
    if (*dual) return cmd_dual(file, out);
    if (*bidual) return cmd_bidual(file, out);
    if (*report) return cmd_report(file, out);
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kFail;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const NotAGroup& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const NotASubgroup& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kInput;
}
