#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinorb/component.hpp"
#include "spinorb/count.hpp"
#include "spinorb/orbit.hpp"
#include "spinorb/spectra.hpp"
#include "spinorb/verify.hpp"
#include "spinorb/weyl.hpp"

using namespace spinorb;
using json = nlohmann::json;

namespace {

// Reported failures of a check exit with 1; malformed input with 2.
constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

void emit(const json& doc, const std::optional<Table>& table, const std::string& format) {
    if (format == "json" || !table) {
        if (format != "json") throw Error(Errc::InvalidArgument, "this command only writes json");
        std::cout << doc.dump(2) << "\n";
        return;
    }
    const Table& t = *table;
    if (format == "csv") {
        auto line = [](const std::vector<std::string>& cells) {
            std::string out;
            for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
            return out;
        };
        std::cout << line(t.header) << "\n";
        for (const auto& r : t.rows) std::cout << line(r) << "\n";
        return;
    }
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += cells[i];
            if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        return out;
    };
    std::cout << line(t.header) << "\n";
    for (const auto& r : t.rows) std::cout << line(r) << "\n";
}

std::string join(const std::vector<HalfInt>& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + c[i].str();
    return out;
}

json ktype_json(const KType& v) {
    return {{"left", coord_strings(v.left.coords)}, {"right", coord_strings(v.right.coords)}};
}

json weight_json(const Weight& w) { return coord_strings(w.coords); }

json multiset_json(const WeightMultiset& m) {
    json out = json::array();
    for (const auto& [w, k] : m) out.push_back({{"weight", weight_json(w)}, {"mult", k}});
    return out;
}

std::pair<int, int> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(Errc::Parse, "expected A,B: " + s);
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error(Errc::Parse, "expected A,B: " + s);
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

Ambient parse_ambient(const std::string& s) {
    if (s == "A") return Ambient::A;
    if (s == "B") return Ambient::B;
    if (s == "D") return Ambient::D;
    throw Error(Errc::Parse, "type must be A, B or D");
}

Numeral parse_numeral(const std::string& s) {
    if (s == "I") return Numeral::I;
    if (s == "II") return Numeral::II;
    if (s.empty() || s == "none") return Numeral::None;
    throw Error(Errc::Parse, "numeral must be I or II");
}

OrbitCase case_orbit(int c, int k, int r, bool second, const std::string& numeral) {
    const bool numbered = c == 1 || ((c == 2 || c == 3) && !second);
    Numeral num = numbered ? (numeral.empty() ? Numeral::I : parse_numeral(numeral)) : Numeral::None;
    auto d = case_diagram(c, k, r, second, num);
    if (!d) throw Error(Errc::InvalidArgument, "no such orbit for the given case parameters");
    auto oc = classify_case(*d);
    if (!oc) throw Error(Errc::InvalidArgument, "diagram is outside the eight families");
    return *oc;
}

json orbit_json(const OrbitCase& oc) {
    return {{"case", oc.case_id},
            {"diagram", oc.diagram.str()},
            {"k", oc.k},
            {"rPlus", oc.r_plus},
            {"rMinus", oc.r_minus},
            {"signature", {oc.signature.first, oc.signature.second}},
            {"labelSignature", {oc.label_signature.first, oc.label_signature.second}},
            {"labelMismatch", oc.label_mismatch()}};
}

Table ktype_table(const std::string& label, const std::string& name, const std::map<KType, int>& m) {
    Table t{{label, "left", "right", "mult"}, {}};
    for (const auto& [v, k] : m) t.rows.push_back({name, join(v.left.coords), join(v.right.coords), std::to_string(k)});
    return t;
}

json ktypes_json(const std::map<KType, int>& m) {
    json out = json::array();
    for (const auto& [v, k] : m) {
        json j = ktype_json(v);
        j["mult"] = k;
        out.push_back(j);
    }
    return out;
}

json cartan_json(const CartanClass& c) {
    return {{"rPlus", c.r_plus}, {"rMinus", c.r_minus}, {"m", c.m}, {"s", c.s},
            {"numeral", numeral_name(c.numeral)}, {"name", c.str()}};
}

json count_json(const UnipotentCount& u) {
    json per = json::array();
    for (const auto& row : u.per_cartan) {
        json j = cartan_json(row.cartan);
        j["components"] = row.components;
        j["abelian"] = row.abelian;
        j["survives"] = row.test.survives;
        j["literalSurvives"] = row.test.literal_survives;
        j["rulesHit"] = row.test.rules_hit;
        j["stabilizer"] = {{"m", row.profile.m},
                           {"extraZ2Z2", row.profile.extra_z2z2},
                           {"extraZ2", row.profile.extra_z2},
                           {"extraZ2Condition", row.profile.extra_z2_condition},
                           {"realPart", {row.profile.real_part.first, row.profile.real_part.second}},
                           {"imagPart", {row.profile.imag_part.first, row.profile.imag_part.second}},
                           {"order", row.profile.order}};
        per.push_back(j);
    }
    json surv = json::array();
    for (const auto& c : u.survivors) surv.push_back(c.str());
    return {{"n", u.n},
            {"k", u.k},
            {"case", u.case_id},
            {"signature", {u.signature.first, u.signature.second}},
            {"perCartan", per},
            {"survivors", surv},
            {"nPerChi", u.n_per_chi},
            {"nGenuineChi", u.n_genuine_chi},
            {"nTotal", u.n_total},
            {"namedReps", u.named_reps},
            {"theoremTable", u.theorem},
            {"notes", u.notes}};
}

Table count_table(const std::vector<UnipotentCount>& all) {
    Table t{{"n", "k", "a", "b", "case", "nPerChi", "nGenuineChi", "nTotal", "theoremTable", "survivors"}, {}};
    for (const auto& u : all) {
        std::string surv;
        for (const auto& c : u.survivors) surv += (surv.empty() ? "" : " ") + c.str();
        t.rows.push_back({std::to_string(u.n), std::to_string(u.k), std::to_string(u.signature.first),
                          std::to_string(u.signature.second), std::to_string(u.case_id), std::to_string(u.n_per_chi),
                          std::to_string(u.n_genuine_chi), std::to_string(u.n_total), std::to_string(u.theorem), surv});
    }
    return t;
}

json criterion_json(const CriterionResult& r) {
    return {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checked", r.checked}, {"details", r.details}};
}

int workers() {
    if (const char* env = std::getenv("SPINORB_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinorb: small unipotent representations of Spin(a, b)"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand
    std::string format = "json";
    app.add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    std::function<int()> action;

    // orbits
    auto* orbits = app.add_subcommand("orbits", "signed diagrams of the eight families");
    orbits->require_subcommand(1);
    int oa = 0, ob = 0, ok_ = 0;
    auto* olist = orbits->add_subcommand("list", "real forms of [3 2^2k 1^*] with signature (a, b)");
    olist->add_option("--a", oa)->required();
    olist->add_option("--b", ob)->required();
    olist->add_option("--k", ok_)->required();
    olist->callback([&] {
        action = [&] {
            auto forms = enumerate_real_forms(oa, ob, ok_);
            std::sort(forms.begin(), forms.end(),
                      [](const OrbitCase& x, const OrbitCase& y) { return x.diagram.str() < y.diagram.str(); });
            json doc = {{"a", oa}, {"b", ob}, {"k", ok_}, {"orbits", json::array()}};
            Table t{{"case", "diagram", "k", "rPlus", "rMinus", "a", "b", "labelMismatch"}, {}};
            for (const auto& f : forms) {
                doc["orbits"].push_back(orbit_json(f));
                t.rows.push_back({std::to_string(f.case_id), f.diagram.str(), std::to_string(f.k),
                                  std::to_string(f.r_plus), std::to_string(f.r_minus), std::to_string(f.signature.first),
                                  std::to_string(f.signature.second), f.label_mismatch() ? "true" : "false"});
            }
            emit(doc, t, format);
            return kOk;
        };
    });

    std::string diagram;
    bool do_verify = false, with_oracle = false;
    auto* ocg = orbits->add_subcommand("component-group", "component group of the centralizer");
    ocg->add_option("--diagram", diagram)->required();
    ocg->add_flag("--verify", do_verify, "also compute it in the Clifford algebra");
    ocg->callback([&] {
        action = [&] {
            auto d = SignedDiagram::parse(diagram);
            GroupTag table = d.is_complex() ? component_group_complex(d.shape()) : component_group(d);
            json doc = {{"diagram", d.str()}, {"group", group_tag_name(table)}};
            int code = kOk;
            if (do_verify) {
                auto rep = verify_component_reps(d);
                doc["computed"] = group_tag_name(rep.computed);
                doc["agrees"] = rep.computed == table;
                if (rep.computed != table) code = kFailed;
            }
            emit(doc, std::nullopt, format);
            return code;
        };
    });

    auto* odim = orbits->add_subcommand("dim", "orbit dimensions and smallness");
    odim->add_option("--diagram", diagram)->required();
    odim->add_flag("--oracle", with_oracle, "compare with the centralizer nullspace");
    odim->callback([&] {
        action = [&] {
            auto d = SignedDiagram::parse(diagram);
            auto od = orbit_dimension(d, with_oracle);
            json doc = {{"diagram", d.str()}, {"complexDim", od.complex_dim}, {"kOrbitDim", od.k_orbit_dim}};
            if (od.small_bound) doc["smallBound"] = *od.small_bound;
            if (od.is_small) doc["isSmall"] = *od.is_small;
            int code = kOk;
            if (with_oracle) {
                doc["oracleDim"] = od.oracle_dim;
                if (od.oracle_dim != od.complex_dim) code = kFailed;
            }
            emit(doc, std::nullopt, format);
            return code;
        };
    });

    // clifford
    auto* cliff = app.add_subcommand("clifford", "Clifford algebra checks");
    cliff->require_subcommand(1);
    auto* cvo = cliff->add_subcommand("verify-orbit", "centralizer representatives and paths for a diagram");
    cvo->add_option("--diagram", diagram)->required();
    cvo->callback([&] {
        action = [&] {
            auto d = SignedDiagram::parse(diagram);
            json doc = {{"diagram", d.str()}};
            int code = kOk;
            try {
                auto rep = verify_component_reps(d);
                json reps = json::array(), paths = json::array();
                for (const auto& r : rep.representatives) {
                    reps.push_back({{"name", r.name}, {"element", r.element}, {"centralizes", r.centralizes},
                                    {"inSpin", r.in_spin}});
                    if (!r.centralizes || !r.in_spin) code = kFailed;
                }
                for (const auto& p : rep.paths) {
                    paths.push_back({{"name", p.name}, {"centralizes", p.centralizes}, {"atPi", p.at_pi},
                                     {"atTwoPi", p.at_two_pi}});
                    if (!p.centralizes) code = kFailed;
                }
                doc["representatives"] = reps;
                doc["paths"] = paths;
                doc["relations"] = rep.relations;
                doc["table"] = group_tag_name(rep.table);
                doc["computed"] = group_tag_name(rep.computed);
                doc["orderS"] = rep.order_s;
                doc["orderN"] = rep.order_n;
                doc["agrees"] = rep.agrees();
                if (!rep.agrees()) code = kFailed;
            } catch (const Error& e) {
                if (e.code() != Errc::RepresentativeFailsToCentralize) throw;
                doc["error"] = e.what();
                code = kFailed;
            }
            emit(doc, std::nullopt, format);
            return code;
        };
    });

    // spectra
    auto* spectra = app.add_subcommand("spectra", "K-type spectra");
    spectra->require_subcommand(1);
    int scase = 0, sk = 0, sr = -1, sa = -1, sb = -1, bound = 8, psi_index = 0;
    bool second = false;
    std::string numeral, rep_name;
    auto case_opts = [&](CLI::App* sc) {
        sc->add_option("--case", scase)->required()->check(CLI::Range(1, 8));
        sc->add_option("--k", sk)->required();
        sc->add_option("--r", sr, "r+ or r- of the case");
        sc->add_option("--a", sa, "signature instead of r");
        sc->add_option("--b", sb);
        sc->add_option("--bound", bound, "doubled L-infinity bound")->check(CLI::NonNegativeNumber);
    };
    auto resolve_r = [&]() {
        if (sr >= 0) return sr;
        if (sa < 0 || sb < 0) {
            if (scase == 1 || scase == 4) return 0;
            throw Error(Errc::InvalidArgument, "give --r or --a/--b");
        }
        for (int t = 0; t <= sa + sb; ++t) {
            try {
                if (case_signature(scase, sk, t) == std::pair{sa, sb}) return t;
            } catch (const Error&) {
            }
        }
        throw Error(Errc::InvalidSignature, "the case does not live on this signature");
    };

    auto* ssec = spectra->add_subcommand("sections", "K-types of R(O~, psi)");
    case_opts(ssec);
    ssec->add_flag("--second", second, "the second orbit of the case");
    ssec->add_option("--numeral", numeral, "I or II");
    ssec->add_option("--psi", psi_index, "1-based index; all when omitted");
    ssec->callback([&] {
        action = [&] {
            auto oc = case_orbit(scase, sk, resolve_r(), second, numeral);
            auto psis = psi_list(oc);
            json doc = {{"orbit", orbit_json(oc)}, {"bound", bound}, {"sections", json::array()}};
            Table t{{"psi", "left", "right", "mult"}, {}};
            for (const auto& p : psis) {
                if (psi_index && p.index != psi_index) continue;
                std::map<KType, int> m;
                for (const auto& v : enumerate_sections(p, bound)) m[v] = 1;
                doc["sections"].push_back({{"psi", p.name}, {"chi", p.chi.str()}, {"defining", ktype_json(p.defining)},
                                           {"ktypes", ktypes_json(m)}, {"notes", p.notes}});
                auto part = ktype_table("psi", p.name, m);
                t.rows.insert(t.rows.end(), part.rows.begin(), part.rows.end());
            }
            if (doc["sections"].empty()) throw Error(Errc::InvalidArgument, "no such psi");
            emit(doc, t, format);
            return kOk;
        };
    });

    auto* srep = spectra->add_subcommand("rep", "K-types of a named representation");
    case_opts(srep);
    srep->add_option("--name", rep_name, "e.g. pi1, tau2, pi^e; all when omitted");
    srep->callback([&] {
        action = [&] {
            const int r = resolve_r();
            std::vector<RepSpectrum> reps;
            if (rep_name.empty()) reps = rep_list(scase, sk, r);
            else reps.push_back(rep_lookup(scase, sk, r, rep_name));
            json doc = {{"case", scase}, {"k", sk}, {"r", r}, {"bound", bound}, {"reps", json::array()}};
            Table t{{"rep", "left", "right", "mult"}, {}};
            for (const auto& rep : reps) {
                auto m = rep.spectrum.enumerate(bound);
                doc["reps"].push_back({{"name", rep.id.name},
                                       {"centralCharacter", rep.id.central_tag},
                                       {"conjectural", rep.id.conjectural},
                                       {"pattern", rep.spectrum.describe()},
                                       {"ktypes", ktypes_json(m)}});
                auto part = ktype_table("rep", rep.id.name, m);
                t.rows.insert(t.rows.end(), part.rows.begin(), part.rows.end());
            }
            emit(doc, t, format);
            return kOk;
        };
    });

    auto* smatch = spectra->add_subcommand("match", "representation spectra against R(O~, psi)");
    case_opts(smatch);
    smatch->callback([&] {
        action = [&] {
            auto tab = matchup_table(scase, sk, resolve_r(), bound);
            json cells = json::array();
            Table t{{"row", "rep", "orbit", "psi", "equal", "count", "conjectural"}, {}};
            for (const auto& c : tab.cells) {
                json j = {{"row", c.row}, {"rep", c.rep}, {"orbit", c.orbit}, {"psi", c.psi},
                          {"equal", c.equal}, {"count", c.count}, {"conjectural", c.conjectural}};
                if (c.first_difference) j["firstDifference"] = ktype_json(*c.first_difference);
                cells.push_back(j);
                t.rows.push_back({std::to_string(c.row), c.rep, c.orbit, c.psi, c.equal ? "true" : "false",
                                  std::to_string(c.count), c.conjectural ? "true" : "false"});
            }
            json doc = {{"case", tab.case_id},
                        {"k", tab.k},
                        {"r", tab.r},
                        {"signature", {tab.signature.first, tab.signature.second}},
                        {"bound", tab.bound},
                        {"cells", cells},
                        {"rowCentral", tab.row_central},
                        {"notes", tab.notes},
                        {"allEqual", tab.all_equal()}};
            emit(doc, t, format);
            return tab.all_equal() ? kOk : kFailed;
        };
    });

    // count
    auto* count = app.add_subcommand("count", "counting unipotent representations");
    count->require_subcommand(1);
    int cn = 0, ck = 0;
    std::string signature;
    auto* cuni = count->add_subcommand("unipotent", "counts per admissible group");
    cuni->add_option("--n", cn)->required();
    cuni->add_option("--k", ck)->required();
    cuni->add_option("--signature", signature, "A,B; every admissible group when omitted");
    cuni->callback([&] {
        action = [&] {
            std::vector<UnipotentCount> all;
            if (!signature.empty()) {
                auto [a, b] = parse_pair(signature);
                all.push_back(count_signature(a, b, cn, ck));
            } else {
                for (auto [a, b] : admissible_groups(cn, ck)) all.push_back(count_signature(a, b, cn, ck));
            }
            json doc;
            if (all.size() == 1) {
                doc = count_json(all[0]);
            } else {
                doc = {{"n", cn}, {"k", ck}, {"groups", json::array()}};
                for (const auto& u : all) doc["groups"].push_back(count_json(u));
            }
            emit(doc, count_table(all), format);
            return kOk;
        };
    });

    auto* ccar = count->add_subcommand("cartans", "Cartan classes of so(a, b)");
    ccar->add_option("--signature", signature)->required();
    ccar->add_option("--n", cn, "with --k, adds the sign test");
    ccar->add_option("--k", ck);
    ccar->callback([&] {
        action = [&] {
            auto [a, b] = parse_pair(signature);
            json list = json::array();
            Table t{{"name", "rPlus", "rMinus", "m", "s", "components", "abelian", "survives"}, {}};
            const bool with_test = cn > 0 && ck > 0;
            std::optional<CountContext> ctx;
            if (with_test) {
                case_for_signature(a, b, cn, ck);
                ctx = CountContext{cn, ck, std::max(a, b), std::min(a, b)};
            }
            for (const auto& c : enumerate_cartans(a, b)) {
                json j = cartan_json(c);
                j["components"] = cartan_component_count(c);
                j["abelian"] = is_abelian_cartan(c);
                std::string surv = "";
                if (ctx) {
                    bool s = survives_sign_test(c, *ctx);
                    j["survives"] = s;
                    surv = s ? "true" : "false";
                }
                list.push_back(j);
                t.rows.push_back({c.str(), std::to_string(c.r_plus), std::to_string(c.r_minus), std::to_string(c.m),
                                  std::to_string(c.s), std::to_string(cartan_component_count(c)),
                                  is_abelian_cartan(c) ? "true" : "false", surv});
            }
            emit(json{{"signature", {a, b}}, {"cartans", list}}, t, format);
            return kOk;
        };
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "character oracles");
    oracle->require_subcommand(1);
    std::string type = "D", lambda, mu;
    int om = 0, on = 0, okk = 0;
    auto* oten = oracle->add_subcommand("tensor", "tensor product decomposition");
    oten->add_option("--type", type, "A, B or D");
    oten->add_option("--lambda", lambda)->required();
    oten->add_option("--mu", mu)->required();
    oten->callback([&] {
        action = [&] {
            Ambient t = parse_ambient(type);
            Weight l(t, parse_coords(split_list(lambda))), m(t, parse_coords(split_list(mu)));
            auto dec = tensor_decompose(l, m);
            emit(json{{"type", type}, {"lambda", weight_json(l)}, {"mu", weight_json(m)}, {"terms", multiset_json(dec)}},
                 std::nullopt, format);
            return kOk;
        };
    });

    auto* obr = oracle->add_subcommand("branch", "gl(m) to so(m) by the Littlewood rule");
    obr->add_option("--lambda", lambda)->required();
    obr->add_option("--m", om)->required();
    obr->callback([&] {
        action = [&] {
            std::vector<int> lam;
            for (const auto& s : split_list(lambda)) {
                try {
                    lam.push_back(std::stoi(s));
                } catch (const std::exception&) {
                    throw Error(Errc::Parse, "partition entries must be integers");
                }
            }
            while (static_cast<int>(lam.size()) < om) lam.push_back(0);
            auto lw = littlewood_branch(lam, om);
            auto orc = branch_oracle(lam, om, std::max(om, kDefaultRankCap));
            emit(json{{"lambda", lam}, {"m", om}, {"littlewood", multiset_json(lw)}, {"oracle", multiset_json(orc)},
                      {"agree", lw == orc}},
                 std::nullopt, format);
            return lw == orc ? kOk : kFailed;
        };
    });

    auto* oid = oracle->add_subcommand("identity", "the denominator identity");
    oid->add_option("--n", on)->required();
    oid->add_option("--k", okk)->required();
    oid->callback([&] {
        action = [&] {
            auto r = denominator_identity(on, okk);
            emit(json{{"n", on}, {"k", okk}, {"lambda", weight_json(r.lambda)},
                      {"lambdaPrime", weight_json(r.lambda_prime)}, {"holds", r.holds}},
                 std::nullopt, format);
            return r.holds ? kOk : kFailed;
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "acceptance suite");
    ver->require_subcommand(1);
    int vn = 0, vk = 0, jobs = 0;
    std::vector<int> only;
    auto* vall = ver->add_subcommand("all", "every criterion, aggregated");
    vall->add_option("--n", vn, "also report counts at this (n, k)");
    vall->add_option("--k", vk);
    vall->add_option("--criterion", only, "run only these ids");
    vall->add_option("--jobs", jobs, "workers; defaults to SPINORB_WORKERS or 1");
    vall->callback([&] {
        action = [&] {
            std::vector<int> ids = only;
            if (ids.empty())
                for (int i = 1; i <= criterion_count(); ++i) ids.push_back(i);
            const int w = jobs > 0 ? jobs : workers();
            std::vector<CriterionResult> results(ids.size());
            for (std::size_t start = 0; start < ids.size(); start += static_cast<std::size_t>(w)) {
                std::vector<std::future<CriterionResult>> batch;
                for (std::size_t i = start; i < std::min(ids.size(), start + static_cast<std::size_t>(w)); ++i)
                    batch.push_back(std::async(std::launch::async, run_criterion, ids[i]));
                for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
            }
            bool all_pass = true;
            json crit = json::array();
            Table t{{"id", "pass", "checked", "title"}, {}};
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                crit.push_back(criterion_json(r));
                t.rows.push_back({std::to_string(r.id), r.pass ? "PASS" : "FAIL", std::to_string(r.checked), r.title});
            }
            json doc = {{"criteria", crit}, {"allPass", all_pass}};
            if (vn > 0 && vk > 0) {
                json counts = json::array();
                for (auto [a, b] : admissible_groups(vn, vk)) {
                    auto u = count_signature(a, b, vn, vk);
                    counts.push_back({{"signature", {a, b}}, {"case", u.case_id}, {"nTotal", u.n_total},
                                      {"theoremTable", u.theorem}});
                }
                doc["counts"] = counts;
            }
            emit(doc, t, format);
            return all_pass ? kOk : kFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const Error& e) {
        std::cerr << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return kUsage;
    }
}
