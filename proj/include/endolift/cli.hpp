#pragma once

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "endolift/endolift.hpp"

namespace endolift::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// exit codes: 0 success, 2 invalid input, 3 internal invariant violation
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitInternal = 3;

// ---------------------------------------------------------------------------
// input parsing helpers
// ---------------------------------------------------------------------------
inline long long parse_int(const std::string& tok) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw domain_error("bad integer '" + tok + "'");
        return v;
    } catch (const domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw domain_error("bad integer '" + tok + "'");
    }
}

inline std::vector<long long> parse_int_list(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw domain_error("empty entry in integer list");
        out.push_back(parse_int(tok));
    }
    if (out.empty()) throw domain_error("empty integer list");
    return out;
}

// Entries are integers or halves written as "p/2" (e.g. "-3/2").
inline CharSet parse_charset(const std::string& csv) {
    std::vector<HalfInt> elems;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw domain_error("empty entry in charset");
        const auto slash = tok.find('/');
        if (slash == std::string::npos) {
            elems.push_back(HalfInt::whole(parse_int(tok)));
        } else {
            if (tok.substr(slash + 1) != "2") throw domain_error("only halves are allowed: '" + tok + "'");
            elems.push_back(HalfInt::from_twice(parse_int(tok.substr(0, slash))));
        }
    }
    return CharSet(std::move(elems));
}

// Thread cap from ENDOLIFT_THREADS (>= 1); internal parallelism must never
// change the output, so results are always merged in index order.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("ENDOLIFT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v < 1) throw domain_error("ENDOLIFT_THREADS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

template <typename In, typename Fn>
auto parallel_transform(const std::vector<In>& items, Fn fn, unsigned threads)
    -> std::vector<decltype(fn(items.front()))> {
    using Out = decltype(fn(items.front()));
    std::vector<Out> out(items.size());
    if (items.empty()) return out;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(items.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) out[i] = fn(items[i]);
        });
    for (auto& th : pool) th.join();
    return out;
}

// ---------------------------------------------------------------------------
// renderers: markdown and csv are pure functions of the JSON envelope
// ---------------------------------------------------------------------------
inline std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Union of the row keys, alphabetical (rows may omit columns).
inline std::vector<std::string> table_columns(const json& rows) {
    std::set<std::string> keys;
    for (const auto& row : rows)
        for (auto it = row.begin(); it != row.end(); ++it) keys.insert(it.key());
    return {keys.begin(), keys.end()};
}

// When an object payload carries exactly one array-of-objects member, that
// member is the natural table; everything else becomes a preamble.
inline const json* embedded_table(const json& result, std::string& preamble) {
    if (!result.is_object()) return nullptr;
    // choose the table member: the key "families" wins, otherwise a unique
    // array-of-objects member; everything else becomes the preamble
    const json* table = nullptr;
    std::string table_key;
    int candidates = 0;
    for (auto it = result.begin(); it != result.end(); ++it) {
        if (!it->is_array() || it->empty() || !it->front().is_object()) continue;
        ++candidates;
        if (it.key() == "families" || table == nullptr) {
            table = &*it;
            table_key = it.key();
        }
    }
    if (!table || (candidates > 1 && table_key != "families")) return nullptr;
    std::string pre;
    for (auto it = result.begin(); it != result.end(); ++it)
        if (it.key() != table_key) pre += it.key() + " = " + cell_text(*it) + "\n";
    preamble = pre;
    return table;
}

inline std::string render_markdown(const json& envelope) {
    std::string out = "# endolift " + envelope["command"].get<std::string>() + "\n\n";
    out += "input: `" + envelope["input"].dump() + "`\n\n";
    json result = envelope["result"];
    std::string preamble;
    if (const json* t = embedded_table(result, preamble)) {
        if (!preamble.empty()) out += preamble + "\n";
        result = *t;
    }
    if (result.is_array() && !result.empty() && result.front().is_object()) {
        const std::vector<std::string> cols = table_columns(result);
        std::string head = "|", sep = "|";
        for (const auto& c : cols) {
            head += " " + c + " |";
            sep += " --- |";
        }
        out += head + "\n" + sep + "\n";
        for (const auto& row : result) {
            std::string line = "|";
            for (const auto& c : cols) line += " " + (row.contains(c) ? cell_text(row[c]) : "") + " |";
            out += line + "\n";
        }
    } else {
        out += "```json\n" + result.dump(2) + "\n```\n";
    }
    for (const auto& w : envelope["warnings"]) out += "\n> warning: " + w.get<std::string>() + "\n";
    return out;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string render_csv(const json& envelope) {
    json result = envelope["result"];
    std::string preamble;
    if (const json* t = embedded_table(result, preamble)) result = *t;
    std::string out;
    if (result.is_array() && !result.empty() && result.front().is_object()) {
        const std::vector<std::string> cols = table_columns(result);
        for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_escape(cols[i]);
        out += "\n";
        for (const auto& row : result) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                out += (i ? "," : "") + csv_escape(row.contains(cols[i]) ? cell_text(row[cols[i]]) : "");
            out += "\n";
        }
    } else {
        out = "result\n" + csv_escape(result.dump()) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// verb payload builders
// ---------------------------------------------------------------------------
namespace detail {

inline DominantWeight sp_weight_from_list(const std::vector<long long>& w) { return DominantWeight::sp(w); }

inline json pipower_with_approx(const PiPower& p) {
    json j = to_json(p);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", p.approx());
    j["approx_display_only"] = buf;
    return j;
}

inline json classify_weight_payload(const std::vector<long long>& w) {
    const auto sp = sp_weight_from_list(w);
    const auto pgl = sp.embed_sp_to_pgl();
    const auto [s, ww] = charset_of(pgl);
    const auto t = classify(s);
    json cpr = json::array();
    for (const auto& x : pgl.chi_plus_rho()) cpr.push_back(to_json(x));
    const auto ap = arch_param(pgl);
    return json{{"weight_sp", to_json(sp)},
                {"weight_pgl", to_json(pgl)},
                {"eta_invariant", is_eta_invariant(pgl)},
                {"chi_plus_rho", cpr},
                {"charset", to_json(s)},
                {"type", to_json(t)},
                {"arch_param", to_json(ap)}};
}

inline json charset_payload(const CharSet& s) {
    const auto t = classify(s);
    json facs = json::array();
    for (const auto& [seed, n] : mw_factorizations(s))
        facs.push_back(json{{"seed", to_json(seed)}, {"n", n}, {"seed_type", to_json(classify(seed))}});
    json j{{"elements", to_json(s)}, {"type", to_json(t)}, {"integral", s.is_integral()},
           {"mw_factorizations", facs}};
    if (t.kind == Kind::C) {
        json parts = json::array();
        for (const auto& p : symmetric_partitions(s)) {
            json blocks = json::array();
            for (const auto& b : p) blocks.push_back(to_json(b));
            parts.push_back(blocks);
        }
        j["symmetric_partitions"] = parts;
    } else {
        j["langlands_target"] = langlands_target(s) == LanglandsTarget::GSp ? "GSp" : "GSO";
    }
    return j;
}

inline json partitions_payload(int n, const std::vector<long long>& coords, PartitionFilter filter) {
    json rows = json::array();
    for (const auto& p : enumerate_representatives(n, coords, 0, filter)) {
        const auto w = w_of(p);
        json ms = json::array();
        for (const auto& m : means(p, coords)) ms.push_back(m.str());
        rows.push_back(json{{"blocks", to_json(p)["blocks"]},
                            {"eta", to_json(classify_eta(p))},
                            {"w_one_line", w.image},
                            {"length", w.length()},
                            {"sign", w.sign()},
                            {"I", kostant_subset(p)},
                            {"means", ms}});
    }
    return rows;
}

inline json franke_payload(const std::vector<long long>& coords, const std::string& filter) {
    const long long sum = std::accumulate(coords.begin(), coords.end(), 0LL);
    const DominantWeight chi = sum == 0 ? DominantWeight::pgl(coords) : DominantWeight::gl(coords);
    std::vector<FrankeTerm> terms;
    if (filter == "all") {
        terms = franke_terms(chi);
    } else if (filter == "fixed") {
        terms = franke_terms_sp(chi);
    } else {
        // generic eta filter over the representative system
        const PartitionFilter pf = filter == "stable" ? PartitionFilter::Stable : PartitionFilter::Invariant;
        for (auto& rep : enumerate_representatives(chi.rank(), chi.coords(), chi.a0(), pf))
            terms.push_back(endolift::detail::make_term(chi.coords(), std::move(rep)));
    }
    json rows = json::array();
    for (const auto& t : terms) rows.push_back(to_json(t));
    return rows;
}

inline json lift_table_payload(const std::vector<long long>& w, unsigned threads) {
    const auto chi = sp_weight_from_list(w);
    const CharSet s = charset_of(chi).first;
    const auto terms = lifting_terms(chi);
    const auto rows = parallel_transform(
        terms,
        [&s](const FrankeTerm& t) {
            json row = to_json(t);
            row["labels"] = to_json(s);  // order isomorphism 1..n -> S_chi
            return row;
        },
        threads);
    json out = json::array();
    for (const auto& r : rows) out.push_back(r);
    return out;
}

inline json octuples_payload(const std::vector<long long>& w, unsigned threads, std::vector<std::string>& warnings) {
    const auto chi = sp_weight_from_list(w);
    const CharSet s = charset_of(chi).first;
    const auto fams = enumerate_families(s);
    const auto rows = parallel_transform(fams, [](const LiftFamily& f) { return to_json(f); }, threads);
    json out = json::array();
    std::size_t obstructed = 0;
    for (std::size_t i = 0; i < fams.size(); ++i) {
        out.push_back(rows[i]);
        if (fams[i].sign_obstructed) ++obstructed;
    }
    warnings.push_back("multiplicity values are conjectural");
    if (obstructed)
        warnings.push_back(std::to_string(obstructed) + " sign-obstructed families present (emitted, not dropped)");
    return json{{"charset", to_json(s)}, {"family_count", fams.size()}, {"families", out}};
}

inline json lefschetz_payload(long long gmax) {
    if (gmax < 0) throw domain_error("lefschetz: --g-max must be >= 0");
    json rows = json::array();
    for (long long g = 0; g <= gmax; ++g) {
        json row{{"g", g}, {"lefschetz_c", lefschetz_c(g).str()}};
        if (g >= 1) row["lefschetz_bd"] = lefschetz_bd(g).str();
        rows.push_back(row);
    }
    return rows;
}

inline json volumes_payload(long long gmax) {
    if (gmax < 1) throw domain_error("volumes: --g-max must be >= 1");
    json rows = json::array();
    for (long long g = 1; g <= gmax; ++g) {
        const auto sp = vol_ch(VolumeGroup::Sp, g);
        const auto so = vol_ch(VolumeGroup::SO, g);
        const auto ratio = sp / so;
        rows.push_back(json{{"g", g},
                            {"vol_st_sp", pipower_with_approx(vol_st_sp(g))},
                            {"vol_ch_sp", pipower_with_approx(sp)},
                            {"vol_ch_so", pipower_with_approx(so)},
                            {"ratio", to_json(ratio)}});
    }
    return rows;
}

inline json examples_payload(const std::string& what, long long a, long long b, long long c, long long gamma,
                             long long k, std::vector<std::string>& warnings) {
    if (what == "g2") {
        if (!(a >= b && b >= 0)) throw domain_error("examples g2: a >= b >= 0 required");
        const CharSet s = CharSet::of_integers({-(a + 2), -(b + 1), 0, b + 1, a + 2});
        json rows = json::array();
        for (const auto& f : enumerate_families(s)) {
            json jf = to_json(f);
            jf["labels"] = g2_case_labels(f, a, b);
            rows.push_back(jf);
        }
        warnings.push_back("multiplicity values are conjectural");
        return json{{"charset", to_json(s)}, {"families", rows}};
    }
    if (what == "g3") {
        if (!(a >= b && b >= c && c >= 0)) throw domain_error("examples g3: a >= b >= c >= 0 required");
        json rows = json::array();
        for (const auto& row : g3_weight_table(a, b, c)) rows.push_back(to_json(row));
        return rows;
    }
    if (what == "ikeda") {
        const auto rep = ikeda_family(gamma, k);
        json j{{"gamma", rep.gamma},
               {"k", rep.k},
               {"g", rep.g},
               {"seed_weight", rep.seed_weight},
               {"siegel_weight", rep.siegel_weight},
               {"family", to_json(*rep.family)}};
        json labels = json::array({"ikeda"});
        if (rep.saito_kurokawa) labels.push_back("saito-kurokawa");
        j["labels"] = labels;
        warnings.push_back("multiplicity values are conjectural");
        return j;
    }
    throw domain_error("examples: --case must be g2, g3 or ikeda");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the command line entry point: exit 0 on success, 2 on invalid input, 3 on
// an internal invariant violation. Output is deterministic for fixed inputs.
// ---------------------------------------------------------------------------
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tables for the Sp(2g) -> PGL(2g+1) lift combinatorics"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string weight_csv, charset_csv, format = "json", filter = "all", case_name;
    long long g = 0, gmax = 2, a = 0, b = 0, c = 0, gamma = 1, k = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "md", "csv"}));
    };

    CLI::App* cw = app.add_subcommand("classify-weight", "weight data, describing set and parameters");
    cw->add_option("--weight", weight_csv)->required();
    add_format(cw);

    CLI::App* cs = app.add_subcommand("charset", "classify a characteristic set and its MW factorizations");
    cs->add_option("--charset", charset_csv)->required();
    add_format(cs);

    CLI::App* pt = app.add_subcommand("partitions", "admissible numbered representatives with eta data");
    pt->add_option("--g", g, "ground set size n")->required();
    pt->add_option("--weight", weight_csv);
    pt->add_option("--filter", filter)->check(CLI::IsMember({"all", "stable", "fixed", "invariant"}));
    add_format(pt);

    CLI::App* fr = app.add_subcommand("franke", "spectral decomposition table for GL_n / PGL_n");
    fr->add_option("--weight", weight_csv)->required();
    fr->add_option("--filter", filter)->check(CLI::IsMember({"all", "stable", "fixed", "invariant"}));
    add_format(fr);

    CLI::App* lt = app.add_subcommand("lift-table", "eta-invariant lifting table with block characters");
    lt->add_option("--g", g)->required();
    lt->add_option("--weight", weight_csv)->required();
    add_format(lt);

    CLI::App* oc = app.add_subcommand("octuples", "Main Theorem family skeletons");
    oc->add_option("--g", g)->required();
    oc->add_option("--weight", weight_csv)->required();
    add_format(oc);

    CLI::App* lf = app.add_subcommand("lefschetz", "Lefschetz number closed forms");
    lf->add_option("--g-max", gmax);
    add_format(lf);

    CLI::App* vo = app.add_subcommand("volumes", "exact Chevalley and standard volumes");
    vo->add_option("--g-max", gmax);
    add_format(vo);

    CLI::App* ex = app.add_subcommand("examples", "worked example families (g2, g3, ikeda)");
    ex->add_option("--case", case_name)->required();
    ex->add_option("--a", a);
    ex->add_option("--b", b);
    ex->add_option("--c", c);
    ex->add_option("--gamma", gamma);
    ex->add_option("--k", k);
    add_format(ex);

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("endolift");
        for (const auto& s : argv) cargv.push_back(s.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitBadInput;
    }

    json input;
    std::vector<std::string> warnings;
    json result;
    std::string command;
    try {
        const unsigned threads = thread_cap();
        if (cw->parsed()) {
            command = "classify-weight";
            const auto w = parse_int_list(weight_csv);
            input = json{{"weight", w}};
            result = detail::classify_weight_payload(w);
        } else if (cs->parsed()) {
            command = "charset";
            const CharSet s = parse_charset(charset_csv);
            input = json{{"charset", charset_csv}};
            result = detail::charset_payload(s);
        } else if (pt->parsed()) {
            command = "partitions";
            std::vector<long long> coords =
                weight_csv.empty() ? std::vector<long long>(static_cast<std::size_t>(g), 0)
                                   : parse_int_list(weight_csv);
            input = json{{"n", g}, {"weight", coords}, {"filter", filter}};
            PartitionFilter f = PartitionFilter::All;
            if (filter == "stable") f = PartitionFilter::Stable;
            if (filter == "fixed") f = PartitionFilter::Fixed;
            if (filter == "invariant") f = PartitionFilter::Invariant;
            result = detail::partitions_payload(static_cast<int>(g), coords, f);
        } else if (fr->parsed()) {
            command = "franke";
            const auto coords = parse_int_list(weight_csv);
            input = json{{"weight", coords}, {"filter", filter}};
            result = detail::franke_payload(coords, filter);
        } else if (lt->parsed()) {
            command = "lift-table";
            const auto w = parse_int_list(weight_csv);
            if (static_cast<long long>(w.size()) != g) throw domain_error("lift-table: --weight must have g entries");
            input = json{{"g", g}, {"weight", w}};
            result = detail::lift_table_payload(w, threads);
        } else if (oc->parsed()) {
            command = "octuples";
            const auto w = parse_int_list(weight_csv);
            if (static_cast<long long>(w.size()) != g) throw domain_error("octuples: --weight must have g entries");
            input = json{{"g", g}, {"weight", w}};
            result = detail::octuples_payload(w, threads, warnings);
        } else if (lf->parsed()) {
            command = "lefschetz";
            input = json{{"g_max", gmax}};
            result = detail::lefschetz_payload(gmax);
        } else if (vo->parsed()) {
            command = "volumes";
            input = json{{"g_max", gmax}};
            result = detail::volumes_payload(gmax);
        } else if (ex->parsed()) {
            command = "examples";
            input = json{{"case", case_name}, {"a", a}, {"b", b}, {"c", c}, {"gamma", gamma}, {"k", k}};
            result = detail::examples_payload(case_name, a, b, c, gamma, k, warnings);
        }
    } catch (const domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }

    json envelope{{"tool", "endolift"},     {"version", kToolVersion}, {"schema_version", kSchemaVersion},
                  {"command", command},     {"input", input},          {"result", result},
                  {"warnings", warnings}};
    if (format == "json")
        out << envelope.dump(2) << "\n";
    else if (format == "md")
        out << render_markdown(envelope);
    else
        out << render_csv(envelope);
    return kExitOk;
}

}  // namespace endolift::cli
