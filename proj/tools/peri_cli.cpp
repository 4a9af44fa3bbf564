#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "peri/periodicity.hpp"

using namespace peri;

namespace {

enum Status { kOk = 0, kFailed = 1, kBadInput = 2 };

struct Outcome {
  std::string out;
  int status = kOk;
};

struct Options {
  std::size_t bound = 60;
  int characteristic = -1;  // -1: from the description
  unsigned ext = 1;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string format = "text";
  std::size_t steps = 6;
  bool tsv() const { return format == "tsv"; }
};

FieldSpec field_for(const FieldSpec& given, const Options& o) {
  FieldSpec f = o.characteristic < 0 ? given : FieldSpec{static_cast<unsigned>(o.characteristic), o.ext};
  if (o.characteristic == 0) f.extension_degree = 1;
  f.validate();
  return f;
}

template <class Fn>
auto with_field(const FieldSpec& f, Fn&& fn) {
  if (f.characteristic == 0) return fn(Rationals{});
  return fn(FiniteField(f.characteristic, f.extension_degree));
}

template <class K>
AlgebraPtr<K> build(const AlgebraDescription& d, const K& field) {
  return std::make_shared<const Algebra<K>>(build_algebra(d.presentation, field, 64, d.name));
}

/// key: value lines, or name\tkey\tvalue rows.
class Table {
 public:
  Table(std::string name, bool tsv) : name_(std::move(name)), tsv_(tsv) {}
  template <class T>
  Table& add(const std::string& key, const T& value) {
    std::ostringstream v;
    v << value;
    if (tsv_)
      os_ << name_ << '\t' << key << '\t' << v.str() << '\n';
    else
      os_ << key << ": " << v.str() << '\n';
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::string name_;
  bool tsv_;
  std::ostringstream os_;
};

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string cartan_str(const std::vector<std::vector<std::size_t>>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "; " : "") + join(c[i]);
  return s;
}

template <class K>
void describe(Table& t, const Algebra<K>& a) {
  t.add("dim", a.dim()).add("vertices", a.vertex_count()).add("loewy length", a.loewy_length());
  t.add("basic", is_basic(a) ? "yes" : "no").add("connected", is_connected(a) ? "yes" : "no");
  // The socle test assumes a basic algebra.
  t.add("self-injective", !is_basic(a) ? "n/a" : nakayama_permutation(a) ? "yes" : "no");
  t.add("schurian", schurian(a) ? "yes" : "no");
  t.add("cartan", cartan_str(cartan(a)));
}

// ---------------------------------------------------------------------------

Outcome cmd_build(const std::string& path, const Options& o) {
  auto d = load_description(path);
  return with_field(field_for(d.field, o), [&](const auto& k) {
    auto a = build(d, k);
    Table t(d.name, o.tsv());
    t.add("algebra", d.name).add("field", k.spec().str());
    describe(t, *a);
    if (d.grading) t.add("grading", d.grading->group.label());
    return Outcome{t.str(), kOk};
  });
}

Outcome cmd_resolve(const std::string& path, bool bimodule, const Options& o) {
  auto d = load_description(path);
  return with_field(field_for(d.field, o), [&](const auto& k) {
    auto a = build(d, k);
    std::ostringstream os;
    const std::size_t nv = a->vertex_count();
    if (bimodule) {
      auto led = bimodule_resolve(a, o.steps);
      os << "bimodule resolution of " << d.name << '\n';
      for (std::size_t r = 0; r <= o.steps; ++r) {
        os << "P" << r << ':';
        for (std::size_t i = 0; i < nv; ++i)
          for (std::size_t j = 0; j < nv; ++j)
            if (auto m = led.multiplicity[r][i * nv + j])
              os << " (" << a->vertex_name(i) << "," << a->vertex_name(j) << ")x" << m;
        os << "  [syzygy dim " << led.syzygies[r + 1].dim() << "]\n";
      }
      os << "happel: pass\n";
    } else {
      for (std::size_t i = 0; i < nv; ++i) {
        auto led = resolve(simple(a, i), o.steps);
        os << "S" << a->vertex_name(i) << '\n';
        for (std::size_t r = 0; r <= o.steps; ++r)
          os << "  P" << r << ": " << join(led.multiplicity[r]) << "  [syzygy dim " << led.syzygies[r + 1].dim() << "]\n";
      }
    }
    return Outcome{os.str(), kOk};
  });
}

Outcome cmd_period(const std::string& path, const Options& o) {
  auto d = load_description(path);
  return with_field(field_for(d.field, o), [&](const auto& k) {
    auto rep = period(build(d, k), o.bound, o.seed);
    return Outcome{o.tsv() ? rep.tsv() : rep.text(), kOk};
  });
}

Outcome cmd_smash(const std::string& path, const Options& o) {
  auto d = load_description(path);
  if (!d.grading) throw InputError(path + " has no [grading] section");
  return with_field(field_for(d.field, o), [&](const auto& k) {
    auto gr = grading_from_spec(build(d, k), *d.grading);
    auto s = smash(gr);
    Table t(d.name, o.tsv());
    t.add("algebra", d.name).add("group", gr.group.label()).add("radical grading", is_radical_grading(gr) ? "yes" : "no");
    t.add("rebased", gr.rebase ? "yes" : "no");
    describe(t, *s.algebra);
    try {
      t.add("blocks of B/J(B)", join(block_profile(*s.algebra)));
    } catch (const InputError&) {
      t.add("blocks of B/J(B)", "unavailable");
    }
    return Outcome{t.str(), kOk};
  });
}

std::size_t to_size(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw InputError(std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
  return static_cast<std::size_t>(v);
}

void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
  if (args.size() < n) throw InputError(std::string("usage: ") + usage);
}

FieldSpec default_field(const Options& o, FieldSpec fallback) {
  return o.characteristic < 0 ? fallback : field_for(fallback, o);
}

Outcome cmd_zoo(const std::vector<std::string>& args, const Options& o) {
  need(args, 2, "zoo preprojective|nakayama|mesh|nonstandard|bdoubleprime ...");
  const std::string& kind = args[0];
  if (kind == "preprojective") {
    need(args, 3, "zoo preprojective FAMILY N");
    return {render_description(preprojective_description(DynkinGraph::parse(args[1], to_size(args[2], "N")),
                                                         default_field(o, FieldSpec::rationals()))),
            kOk};
  }
  if (kind == "nakayama") {
    need(args, 3, "zoo nakayama SIMPLES LOEWY");
    return {render_description(nakayama_description(to_size(args[1], "SIMPLES"), to_size(args[2], "LOEWY"),
                                                     default_field(o, FieldSpec::rationals()))),
            kOk};
  }
  if (kind == "nonstandard")
    return {render_description(nonstandard_description(to_size(args[1], "M"), default_field(o, FieldSpec::galois(2)))), kOk};
  if (kind == "bdoubleprime")
    return {render_description(bdoubleprime_description(to_size(args[1], "M"), default_field(o, FieldSpec::galois(2)))), kOk};
  if (kind == "mesh") {
    need(args, 4, "zoo mesh FAMILY N M");
    auto d = DynkinGraph::parse(args[1], to_size(args[2], "N"));
    const std::size_t m = to_size(args[3], "M");
    return with_field(default_field(o, FieldSpec::rationals()), [&](const auto& k) {
      auto s = mesh_algebra(d, m, k);
      Table t("mesh(" + d.str() + "," + std::to_string(m) + ")", o.tsv());
      t.add("algebra", "mesh(" + d.str() + "," + std::to_string(m) + ")").add("field", k.spec().str());
      describe(t, *s.algebra);
      auto f = mesh_period_formula(d, m, k.characteristic());
      t.add("period formula", std::to_string(f.value) + (f.exact ? " (exact)" : " (multiple of the period)"));
      return Outcome{t.str(), kOk};
    });
  }
  throw InputError("unknown zoo kind '" + kind + "'");
}

Outcome cmd_table52(const std::vector<std::string>& args, bool nonstandard, const Options& o) {
  need(args, 3, "table52 FAMILY N F [T]");
  SelfInjectiveType t;
  t.tree = DynkinGraph::parse(args[0], to_size(args[1], "N"));
  const auto& f = args[2];
  const auto slash = f.find('/');
  t.f_num = to_size(f.substr(0, slash), "F");
  t.f_den = slash == std::string::npos ? 1 : to_size(f.substr(slash + 1), "F");
  if (t.f_num == 0 || t.f_den == 0) throw InputError("frequency must be positive");
  t.t = args.size() > 3 ? to_size(args[3], "T") : 1;
  t.nonstandard = nonstandard;
  const unsigned ch = o.characteristic < 0 ? 0 : static_cast<unsigned>(o.characteristic);
  auto e = table52(t, ch);
  std::vector<std::size_t> c(e.candidates.begin(), e.candidates.end());
  if (o.tsv()) {
    Table tab(t.str(), true);
    tab.add("row", e.row).add("case", e.cases).add("candidates", join(c, ",")).add("functorial_only", e.functorial_only ? 1 : 0);
    return {tab.str(), kOk};
  }
  std::ostringstream os;
  os << join(c) << "\nrow: " << e.row << "\ncase: " << e.cases << '\n';
  if (c.size() > 1) os << "note: the period is one of the listed values\n";
  if (e.functorial_only) os << "note: the value is the order of the syzygy functor on the stable category\n";
  return {os.str(), kOk};
}

Outcome verdict(const std::string& text, bool pass) { return {text, pass ? kOk : kFailed}; }

Outcome cmd_verify(const std::vector<std::string>& args, const Options& o) {
  need(args, 1, "verify thm37|thm42|thm61|happel|lemma22|generation|cy ...");
  const std::string& what = args[0];
  if (what == "thm61") {
    const std::size_t m = args.size() > 1 ? to_size(args[1], "M") : 2;
    auto f = default_field(o, FieldSpec::galois(2));
    if (f.characteristic != 2) throw InputError("thm61 needs characteristic 2");
    auto v = verify_thm61(m, FiniteField(2, f.extension_degree), o.bound, o.seed);
    return verdict(v.text(), v.pass());
  }
  if (what == "thm42") {
    need(args, 4, "verify thm42 FAMILY N S");
    auto d = DynkinGraph::parse(args[1], to_size(args[2], "N"));
    const std::size_t s = to_size(args[3], "S");
    return with_field(default_field(o, FieldSpec::rationals()), [&](const auto& k) {
      auto v = verify_thm42(d, s, k, o.bound, o.seed);
      return verdict(v.text(), v.pass());
    });
  }
  need(args, 2, "verify CHECK FILE");
  auto d = load_description(args[1]);
  return with_field(field_for(d.field, o), [&](const auto& k) -> Outcome {
    using K = std::decay_t<decltype(k)>;
    auto a = build(d, k);
    auto graded = [&] {
      if (!d.grading) throw InputError(args[1] + " has no [grading] section");
      return grading_from_spec(a, *d.grading);
    };
    if (what == "thm37") {
      auto v = verify_thm37(graded(), o.bound, o.seed);
      return verdict(v.text(), v.pass());
    }
    if (what == "happel") {
      try {
        bimodule_resolve(a, o.steps);
      } catch (const ConsistencyError& e) {
        return verdict(std::string("happel: fail\n") + e.what() + "\n", false);
      }
      return verdict("happel: pass (" + std::to_string(o.steps) + " steps)\n", true);
    }
    if (what == "lemma22") {
      auto s = smash(graded());
      const bool ok = check_lemma22<K>(s).isomorphic;
      return verdict(std::string("B (x)_A B = sum of twists: ") + (ok ? "yes" : "no") + "\n", ok);
    }
    if (what == "generation") {
      std::ostringstream os;
      bool ok = true;
      for (const auto& r : graded_generation(graded(), o.steps, o.seed)) {
        os << "r=" << r.r << " applies=" << (r.applies ? "yes" : "no") << " generated-in-e=" << (r.generated_in_e ? "yes" : "no")
           << " simples-fixed=" << (r.simples_fixed ? "yes" : "no") << '\n';
        if (r.applies && r.generated_in_e != r.simples_fixed) ok = false;
      }
      return verdict(os.str(), ok);
    }
    if (what == "cy") {
      auto dcy = stable_cy_dimension(a, o.bound, o.seed);
      return verdict("stably Calabi-Yau dimension: " + (dcy ? std::to_string(*dcy) : std::string("none within bound")) + "\n",
                     dcy.has_value());
    }
    throw InputError("unknown check '" + what + "'");
  });
}

/// Runs jobs on up to `jobs` threads; outputs keep the input order.
std::vector<Outcome> run_all(const std::vector<std::string>& files, std::size_t jobs,
                             const std::function<Outcome(const std::string&)>& fn) {
  std::vector<Outcome> out(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      try {
        out[i] = fn(files[i]);
      } catch (const InputError& e) {
        out[i] = {std::string("error: ") + e.what() + "\n", kBadInput};
      } catch (const std::exception& e) {
        out[i] = {std::string("failure: ") + e.what() + "\n", kFailed};
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::max<std::size_t>(1, std::min(jobs, files.size())); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodicity of finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> args;
  bool bimodule = false, nonstandard = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "largest syzygy searched")->capture_default_str();
    sub->add_option("--char", o.characteristic, "field characteristic (0 for Q); overrides the file");
    sub->add_option("--ext", o.ext, "extension degree of GF(p^k)")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for randomized steps")->capture_default_str();
    sub->add_option("--jobs", o.jobs, "parallel jobs for several inputs")->capture_default_str();
    sub->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();
    sub->add_option("--steps", o.steps, "resolution length")->capture_default_str();
    sub->add_option("args", args, "arguments")->required();
  };
  auto* b = app.add_subcommand("build", "construct an algebra and summarize it");
  auto* r = app.add_subcommand("resolve", "minimal resolutions of the simples or of A as a bimodule");
  auto* p = app.add_subcommand("period", "bimodule period search");
  auto* s = app.add_subcommand("smash", "smash product with the grading group");
  auto* z = app.add_subcommand("zoo", "generate algebras: preprojective, nakayama, mesh, nonstandard, bdoubleprime");
  auto* t = app.add_subcommand("table52", "period table lookup: FAMILY N F [T]");
  auto* v = app.add_subcommand("verify", "checks: thm37, thm42, thm61, happel, lemma22, generation, cy");
  for (auto* sub : {b, r, p, s, z, t, v}) common(sub);
  r->add_flag("--bimodule", bimodule, "resolve A over A^e");
  t->add_flag("--nonstandard", nonstandard, "the nonstandard row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  auto per_file = [&](const std::function<Outcome(const std::string&)>& fn) {
    int status = kOk;
    for (const auto& out : run_all(args, o.jobs, fn)) {
      std::cout << out.out;
      status = std::max(status, out.status);
    }
    return status;
  };
  auto single = [&](const std::function<Outcome()>& fn) {
    auto out = run_all({""}, 1, [&](const std::string&) { return fn(); });
    std::cout << out[0].out;
    return out[0].status;
  };

  if (b->parsed()) return per_file([&](const std::string& f) { return cmd_build(f, o); });
  if (r->parsed()) return per_file([&](const std::string& f) { return cmd_resolve(f, bimodule, o); });
  if (p->parsed()) return per_file([&](const std::string& f) { return cmd_period(f, o); });
  if (s->parsed()) return per_file([&](const std::string& f) { return cmd_smash(f, o); });
  if (z->parsed()) return single([&] { return cmd_zoo(args, o); });
  if (t->parsed()) return single([&] { return cmd_table52(args, nonstandard, o); });
  if (v->parsed()) return single([&] { return cmd_verify(args, o); });
  return kBadInput;
}
