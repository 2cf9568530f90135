#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "lnd/derivation.hpp"
#include "lnd/error.hpp"
#include "lnd/grade.hpp"
#include "lnd/kernel.hpp"
#include "lnd/presentation.hpp"
#include "lnd/rees.hpp"
#include "lnd/session.hpp"

namespace lnd {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr int report_schema_version = 1;

struct RunConfig {
  std::uint64_t seed = 0;
  Limits limits;
  bool timing = true;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json poly_list_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const Polynomial& p : ps) a.push_back(p.to_string());
  return a;
}

// An ideal together with the ring its generators live in. Ideals of a
// subalgebra are carried in the subalgebra's presentation.
struct IdealEntry {
  std::string owner;
  const PresentedRing* ring = nullptr;
  const Subalgebra* sub = nullptr;
  std::vector<Polynomial> gens;  // in *ring

  Polynomial to_ring(const Polynomial& f) const { return sub ? sub->to_presentation(f) : ring->reduce(f); }
  Polynomial from_ring(const Polynomial& e) const { return sub ? sub->evaluate(e) : e; }
  std::vector<Polynomial> from_ring(const std::vector<Polynomial>& es) const {
    std::vector<Polynomial> out;
    for (const Polynomial& e : es) out.push_back(from_ring(e));
    return out;
  }
};

class Runner {
 public:
  explicit Runner(RunConfig cfg) : cfg_(std::move(cfg)) {}

  json run(const Session& s) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    json report;
    report["schema_version"] = report_schema_version;
    report["tool_version"] = tool_version;
    report["seed"] = cfg_.seed;
    report["declarations"] = json::array();
    report["results"] = json::array();
    for (const Declaration& d : s.declarations) report["declarations"].push_back(declare(d));
    for (const Command& c : s.commands) {
      const auto t0 = clock::now();
      json r = execute(c);
      if (cfg_.timing)
        r["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
      report["results"].push_back(std::move(r));
    }
    if (cfg_.timing)
      report["timing"] = {
          {"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count()}};
    return report;
  }

 private:
  // -- declarations -------------------------------------------------------

  json declare(const Declaration& d) {
    json out{{"declaration", to_string(d)}, {"status", "ok"}, {"notes", json::array()}};
    const std::string name = std::visit([](const auto& x) { return x.name; }, d);
    try {
      std::visit([&](const auto& x) { bind(x, out); }, d);
    } catch (const Error& e) {
      failed_[name] = e.what();
      out["status"] = "error";
      out["notes"].push_back(e.what());
    }
    return out;
  }

  void require(const std::string& name) const {
    auto it = failed_.find(name);
    if (it != failed_.end()) throw InvalidArgument("'" + name + "' failed to build: " + it->second);
  }

  void bind(const RingDecl& r, json&) {
    if (!r.base) {
      rings_.emplace(r.name, PresentedRing::polynomial(make_context(r.variables)));
      return;
    }
    require(*r.base);
    rings_.emplace(r.name, PresentedRing::quotient(rings_.at(*r.base).context(), r.relations, cfg_.limits));
  }

  void bind(const SubalgebraDecl& a, json&) {
    require(a.ring);
    subalgebras_.emplace(a.name, Subalgebra(rings_.at(a.ring), a.generators, cfg_.limits));
  }

  void bind(const DerivationDecl& d, json& out) {
    require(d.domain);
    std::optional<Subalgebra> domain;
    const PresentedRing* ring = nullptr;
    if (auto it = subalgebras_.find(d.domain); it != subalgebras_.end()) {
      domain = it->second;
      ring = &it->second.ambient();
    } else {
      ring = &rings_.at(d.domain);
    }
    Derivation der = Derivation::from_images(*ring, d.images, domain);
    const WellDefinedResult wd = check_well_defined(der);
    if (wd.failing_relation)
      throw InvalidArgument("not well defined: D(" + wd.failing_relation->to_string() + ") is nonzero in the ring");
    if (wd.zero_divisors)
      throw InvalidArgument("ring is not a domain: " + wd.zero_divisors->first.to_string() + " * " +
                            wd.zero_divisors->second.to_string() + " = 0");
    if (domain) {
      const RestrictionResult rr = restricts_to(der, *domain);
      if (!rr.restricts)
        throw InvalidArgument("does not map " + d.domain + " into itself: image of " + rr.generator->to_string() +
                              " leaves it");
      out["notes"].push_back("restricts to " + d.domain);
    }
    derivations_.emplace(d.name, std::move(der));
  }

  void bind(const IdealDecl& i, json&) {
    require(i.owner);
    IdealEntry e;
    e.owner = i.owner;
    if (auto it = subalgebras_.find(i.owner); it != subalgebras_.end()) {
      e.sub = &it->second;
      e.ring = &it->second.presentation();
    } else {
      e.ring = &rings_.at(i.owner);
    }
    for (const Polynomial& g : i.generators) {
      if (e.sub && !e.sub->contains(g))
        throw InvalidArgument("generator " + g.to_string() + " is not in " + i.owner);
      e.gens.push_back(e.to_ring(g));
    }
    ideals_.emplace(i.name, std::move(e));
  }

  const Derivation& derivation(const std::string& name) const {
    require(name);
    return derivations_.at(name);
  }
  const Subalgebra& subalgebra(const std::string& name) const {
    require(name);
    return subalgebras_.at(name);
  }
  const IdealEntry& ideal(const std::string& name) const {
    require(name);
    return ideals_.at(name);
  }

  // -- commands -----------------------------------------------------------

  json execute(const Command& c) {
    json r{{"command", to_string(c)},
           {"line", c.line},
           {"status", "ok"},
           {"value", nullptr},
           {"witnesses", json::array()},
           {"notes", json::array()}};
    try {
      dispatch(c, r);
    } catch (const BudgetExceeded& e) {
      fail(r, std::string("budget exceeded: ") + e.what());
    } catch (const Unsupported& e) {
      fail(r, std::string("unsupported: ") + e.what());
    } catch (const Error& e) {
      fail(r, e.what());
    }
    return r;
  }

  static void fail(json& r, const std::string& why) {
    r["status"] = "error";
    r["value"] = nullptr;
    r["witnesses"] = json::array();
    r["notes"].push_back(why);
  }

  GradeOptions grade_options() const {
    GradeOptions o;
    o.seed = cfg_.seed;
    o.limits = cfg_.limits;
    return o;
  }

  static void grade_json(const GradeReport& g, const std::vector<Polynomial>& witness, json& r) {
    r["value"] = to_string(g.value);
    r["witnesses"] = poly_list_json(witness);
    r["notes"].push_back("method " + to_string(g.method));
    if (g.exhaustive) r["notes"].push_back("decided exactly");
    if (g.probabilistic) r["notes"].push_back("random search only");
    if (g.capped) r["notes"].push_back("capped at 2; deeper sequences not searched");
  }

  void dispatch(const Command& c, json& r) {
    const Limits& lim = cfg_.limits;
    switch (c.kind) {
      case CommandKind::nilpotent: {
        const Derivation& d = derivation(c.target);
        const std::size_t bound = c.number.value_or(default_nilpotency_bound(d));
        const NilpotencyCertificate cert = certify_nilpotent(d, bound);
        r["value"] = cert.certified ? "certified" : "inconclusive-at-bound";
        r["notes"].push_back("bound " + std::to_string(bound));
        for (std::size_t v = 0; v < cert.orders.size(); ++v) {
          const std::string& x = d.ring().context()->names()[v];
          r["notes"].push_back(cert.orders[v] ? "D^" + std::to_string(*cert.orders[v]) + "(" + x + ") = 0"
                                              : x + " survives the bound");
        }
        return;
      }
      case CommandKind::fpf: {
        const Derivation& d = derivation(c.target);
        const bool fpf = fpf_test(d, lim);
        r["value"] = fpf;
        std::vector<Polynomial> imgs;
        for (const Polynomial& p : d.generator_images())
          if (!p.is_zero()) imgs.push_back(p);
        r["witnesses"] = poly_list_json(imgs);
        r["notes"].push_back(fpf ? "image ideal is the unit ideal" : "image ideal is proper");
        return;
      }
      case CommandKind::irreducible: {
        const IrreducibilityResult ir = irreducible_over_ufd(derivation(c.target));
        r["value"] = ir.irreducible;
        if (!ir.irreducible) r["witnesses"].push_back(ir.common_divisor.to_string());
        return;
      }
      case CommandKind::contained: {
        const Derivation& d = derivation(c.target);
        const ContainmentResult cr = contained_in_principal(d, c.polys.at(0), lim);
        r["value"] = cr.contained;
        if (cr.image) r["witnesses"].push_back(cr.image->to_string());
        if (!d.ring().is_polynomial_ring() || d.on_subalgebra())
          r["notes"].push_back("checked for the named element only; other primes are not examined");
        return;
      }
      case CommandKind::restricts: {
        const RestrictionResult rr = restricts_to(derivation(c.target), subalgebra(c.other));
        r["value"] = rr.restricts;
        if (rr.generator) r["witnesses"].push_back(rr.generator->to_string());
        return;
      }
      case CommandKind::member: {
        const Polynomial& f = c.polys.at(0);
        if (auto it = ideals_.find(c.target); it != ideals_.end() || failed_.count(c.target)) {
          const IdealEntry& e = ideal(c.target);
          if (e.sub && !e.sub->contains(f)) {
            r["value"] = false;
            r["notes"].push_back("element is not in " + e.owner);
            return;
          }
          r["value"] = e.ring->member(e.to_ring(f), e.gens, lim);
          return;
        }
        const Subalgebra& a = subalgebra(c.target);
        const MembershipResult m = subalgebra_member(f, a);
        r["value"] = m.member;
        if (m.witness) {
          r["witnesses"].push_back(m.witness->to_string());
          const auto& tags = m.witness->context()->names();
          for (std::size_t i = 0; i < a.generators().size(); ++i)
            r["notes"].push_back(tags[i] + " = " + a.generators()[i].to_string());
        }
        return;
      }
      case CommandKind::grade: {
        const Derivation& d = derivation(c.target);
        const GradeReport g = grade_of_derivation(d, grade_options());
        std::vector<Polynomial> w;
        for (const Polynomial& p : g.witness) w.push_back(d.from_domain(p));
        grade_json(g, w, r);
        return;
      }
      case CommandKind::grade_ideal: {
        const IdealEntry& e = ideal(c.target);
        const GradeReport g = grade_of_ideal(e.gens, *e.ring, grade_options());
        grade_json(g, e.from_ring(g.witness), r);
        return;
      }
      case CommandKind::kernel: {
        const Derivation& d = derivation(c.target);
        const KernelReport k = c.other.empty() ? kernel_generators(d, *c.number, lim)
                                               : kernel_against(d, *c.number, subalgebra(c.other), lim);
        json v{{"degree", k.degree_bound}, {"dimension", k.basis.size()}, {"generators", poly_list_json(k.generators)}};
        if (k.claimed) {
          const GeneratorVerdict& g = *k.claimed;
          v["expect"] = {{"subalgebra", c.other},
                         {"verdict", to_string(g.verdict)},
                         {"kernel_dimension", g.left_dimension},
                         {"expected_dimension", g.right_dimension}};
          if (g.only_left) r["witnesses"].push_back(g.only_left->to_string());
          if (g.only_right) r["witnesses"].push_back(g.only_right->to_string());
        }
        r["value"] = std::move(v);
        r["notes"].push_back("exact up to degree " + std::to_string(k.degree_bound));
        return;
      }
      case CommandKind::slice: {
        const auto s = slice_search(derivation(c.target), *c.number, lim);
        if (!s) {
          r["notes"].push_back("no slice or local slice up to degree " + std::to_string(*c.number));
          return;
        }
        r["value"] = {{"slice", s->slice.to_string()}, {"image", s->image.to_string()}, {"local", s->is_local()}};
        r["witnesses"].push_back(s->slice.to_string());
        return;
      }
      case CommandKind::dixmier: {
        const Derivation& d = derivation(c.target);
        const Polynomial& s = c.polys.at(0);
        if (d.on_subalgebra() && !d.domain()->contains(s)) throw InvalidArgument("slice is not in the domain");
        const Polynomial image = d.apply(s);
        if (image.is_zero()) throw InvalidArgument("D kills the proposed slice");
        if (!d.apply(image).is_zero()) throw InvalidArgument("D of the proposed slice is not in the kernel");
        const DixmierValue v = dixmier(d, SliceData{s, image}, c.polys.at(1));
        r["value"] = {{"numerator", v.numerator.to_string()}, {"base", v.base.to_string()}, {"exponent", v.exponent}};
        r["notes"].push_back(d.apply(v.numerator).is_zero() ? "value is in the kernel" : "value is NOT in the kernel");
        return;
      }
      case CommandKind::symbolic: {
        const IdealEntry& e = ideal(c.target);
        const auto gens = symbolic_power(e.gens, *c.number, e.to_ring(c.polys.at(0)), *e.ring, lim);
        r["value"] = poly_list_json(e.from_ring(gens));
        r["notes"].push_back("saturation of the ordinary power; the saturator is not checked");
        return;
      }
      case CommandKind::rees: {
        const IdealEntry& e = ideal(c.target);
        const ReesData rd = rees_truncation(e.gens, *c.number, e.to_ring(c.polys.at(0)), *e.ring, lim);
        json pieces = json::array();
        for (const auto& p : rd.pieces) pieces.push_back(poly_list_json(e.from_ring(p)));
        json v{{"sound", rd.sound()}, {"checks", rd.checks_run}, {"pieces", std::move(pieces)}};
        for (const std::string& diag : rd.diagnostics) r["notes"].push_back(diag);
        if (!c.other.empty()) {
          if (e.sub) throw Unsupported("kernel comparison needs an ideal of a ring");
          const KernelReport k = kernel_generators(derivation(c.other), *c.number2, lim);
          const ReesComparison cmp = compare_kernel_to_rees(k, rd, c.names, lim);
          json placements = json::array();
          for (const ReesPlacement& p : cmp.placements)
            placements.push_back({{"generator", p.generator.to_string()},
                                  {"degree", p.degree ? json(*p.degree) : json(nullptr)},
                                  {"placed", p.placed},
                                  {"detail", p.detail}});
          v["comparison"] = {{"derivation", c.other},
                             {"kernel_degree", *c.number2},
                             {"consistent", cmp.consistent},
                             {"placements", std::move(placements)}};
        }
        r["value"] = std::move(v);
        return;
      }
      case CommandKind::verify: {
        const GeneratorVerdict g = verify_generators_up_to_degree(subalgebra(c.target), c.polys, *c.number, lim);
        r["value"] = to_string(g.verdict);
        if (g.only_left) r["witnesses"].push_back(g.only_left->to_string());
        if (g.only_right) r["witnesses"].push_back(g.only_right->to_string());
        r["notes"].push_back("dimensions " + std::to_string(g.left_dimension) + " and " +
                             std::to_string(g.right_dimension) + " up to degree " + std::to_string(*c.number));
        return;
      }
    }
  }

  RunConfig cfg_;
  std::map<std::string, PresentedRing> rings_;
  std::map<std::string, Subalgebra> subalgebras_;
  std::map<std::string, Derivation> derivations_;
  std::map<std::string, IdealEntry> ideals_;
  std::map<std::string, std::string> failed_;
};

}  // namespace detail

// Execute a parsed session. Per-command failures are recorded in the report
// and do not stop later commands.
inline nlohmann::ordered_json run_session(const Session& s, const RunConfig& cfg = {}) { return detail::Runner(cfg).run(s); }

// 0 when every declaration and command succeeded, 2 otherwise.
inline int report_exit_code(const nlohmann::ordered_json& report) {
  for (const char* key : {"declarations", "results"})
    for (const auto& entry : report.at(key))
      if (entry.at("status") != "ok") return 2;
  return 0;
}

// Copy of a report without timing fields, for byte comparisons.
inline nlohmann::ordered_json strip_timing(nlohmann::ordered_json report) {
  report.erase("timing");
  for (auto& r : report["results"]) r.erase("elapsed_ms");
  return report;
}

}  // namespace lnd
