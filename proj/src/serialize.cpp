#include "monoci/serialize.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace monoci {

namespace {

using ojson = nlohmann::ordered_json;

ojson ring_json(const RingContext& ring) {
    return ojson{{"variables", ring.variables()}, {"field", ring.field().to_string()}};
}

ojson generators_json(const MonomialIdeal& a) {
    ojson gens = ojson::array();
    for (const auto& g : a.generators()) gens.push_back(a.ring().format(g));
    return gens;
}

std::string dump(const ojson& j, int indent) { return j.dump(indent < 0 ? -1 : indent) + "\n"; }

}  // namespace

std::string report_to_json(const InvariantReport& r, int indent) {
    ojson dg = r.dg ? ojson{{"value", r.dg->value}, {"horizon", r.dg->horizon}, {"certified", false}}
                    : ojson{{"value", nullptr}, {"horizon", nullptr}, {"certified", false}};
    ojson md = r.min_depth_powers ? ojson{{"value", r.min_depth_powers->value}, {"horizon", r.min_depth_powers->horizon}}
                                  : ojson{{"value", nullptr}, {"horizon", nullptr}};
    ojson j{
        {"ring", ring_json(r.ideal.ring())},
        {"ideal", {{"generators", generators_json(r.ideal)}}},
        {"invariants",
         {{"mu", r.mu},
          {"height", r.height},
          {"dim_quotient", r.dim_quotient},
          {"depth", r.depth},
          {"proj_dim", r.proj_dim},
          {"cd", r.cd},
          {"fgrade", r.fgrade},
          {"analytic_spread", r.analytic_spread},
          {"ara", {{"lower", r.ara.lower}, {"upper", r.ara.upper}, {"certified", r.ara.certified}}},
          {"dg", dg},
          {"min_depth_powers", md}}},
        {"flags",
         {{"squarefree", r.flags.squarefree},
          {"cohen_macaulay", r.flags.cohen_macaulay},
          {"cohomologically_ci", r.flags.cohomologically_ci},
          {"stci_certified", r.flags.stci_certified}}},
    };
    return dump(j, indent);
}

std::string report_to_text(const InvariantReport& r) {
    std::ostringstream os;
    const auto& ring = r.ideal.ring();
    os << "ring      ";
    for (std::size_t i = 0; i < ring.variables().size(); ++i) os << (i ? ", " : "") << ring.variables()[i];
    os << " over " << ring.field().to_string() << "\n";
    os << "ideal     " << r.ideal.to_string() << "\n";
    auto row = [&](const char* k, std::size_t v) { os << "  " << k << std::string(18 - std::string(k).size(), ' ') << v << "\n"; };
    row("mu", r.mu);
    row("height", r.height);
    row("dim_quotient", r.dim_quotient);
    row("depth", r.depth);
    row("proj_dim", r.proj_dim);
    row("cd", r.cd);
    row("fgrade", r.fgrade);
    row("analytic_spread", r.analytic_spread);
    os << "  ara               [" << r.ara.lower << ", " << r.ara.upper << "]"
       << (r.ara.certified ? " certified" : " uncertified") << "\n";
    os << "  sv witness        ";
    for (std::size_t l = 0; l < r.ara.witness.size(); ++l) {
        os << (l ? " | " : "");
        for (std::size_t i = 0; i < r.ara.witness[l].size(); ++i)
            os << (i ? " + " : "") << ring.format(r.ara.witness[l][i]);
    }
    os << "\n";
    if (r.dg) os << "  dg                " << r.dg->value << " (horizon " << r.dg->horizon << ", uncertified)\n";
    else os << "  dg                skipped\n";
    if (r.min_depth_powers)
        os << "  min_depth_powers  " << r.min_depth_powers->value << " (horizon " << r.min_depth_powers->horizon << ")\n";
    else os << "  min_depth_powers  skipped\n";
    os << "flags     squarefree=" << r.flags.squarefree << " cohen_macaulay=" << r.flags.cohen_macaulay
       << " cohomologically_ci=" << r.flags.cohomologically_ci << " stci_certified=" << r.flags.stci_certified << "\n";
    for (const auto& n : r.notes) os << "note      " << n << "\n";
    return os.str();
}

std::string checks_to_json(const std::vector<CheckResult>& results, int indent) {
    ojson list = ojson::array();
    std::map<std::string, std::size_t> summary{{"pass", 0}, {"fail", 0}, {"not-applicable", 0}, {"uncertified", 0}};
    for (const auto& r : results) {
        ojson values = ojson::object();
        for (const auto& [k, v] : r.values) values[k] = v;
        ojson item{{"name", r.name},
                   {"verdict", to_string(r.verdict)},
                   {"ring", ring_json(r.ideal.ring())},
                   {"generators", generators_json(r.ideal)},
                   {"horizon", r.horizon}};
        if (r.q) item["q"] = r.q;
        if (!r.blocks.empty()) item["blocks"] = r.blocks;
        item["values"] = values;
        item["detail"] = r.detail;
        list.push_back(item);
        ++summary[to_string(r.verdict)];
    }
    ojson s = ojson::object();
    for (const char* k : {"pass", "fail", "not-applicable", "uncertified"}) s[k] = summary[k];
    return dump(ojson{{"results", list}, {"summary", s}}, indent);
}

std::string checks_to_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::map<Verdict, std::size_t> counts;
    for (const auto& r : results) {
        ++counts[r.verdict];
        os << to_string(r.verdict) << "  " << r.name << "  " << r.ideal.to_string();
        if (r.verdict != Verdict::pass && !r.detail.empty()) os << "  -- " << r.detail;
        os << "\n";
    }
    os << results.size() << " checks: " << counts[Verdict::pass] << " pass, " << counts[Verdict::fail] << " fail, "
       << counts[Verdict::not_applicable] << " not-applicable, " << counts[Verdict::uncertified] << " uncertified\n";
    return os.str();
}

std::string decomposition_to_json(const MonomialIdeal& a, const std::vector<IrreducibleComponent>& components,
                                  const std::vector<MonomialIdeal>& primes, int indent) {
    ojson comps = ojson::array();
    for (const auto& c : components) comps.push_back(generators_json(c.ideal()));
    ojson ps = ojson::array();
    for (const auto& p : primes) ps.push_back(generators_json(p));
    return dump(ojson{{"ring", ring_json(a.ring())},
                      {"ideal", {{"generators", generators_json(a)}}},
                      {"irreducible_components", comps},
                      {"minimal_primes", ps}},
                indent);
}

std::string ideal_to_json(const MonomialIdeal& a, int indent) {
    return dump(ojson{{"ring", ring_json(a.ring())}, {"ideal", {{"generators", generators_json(a)}}}}, indent);
}

}  // namespace monoci
