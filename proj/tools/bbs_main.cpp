/*
   Copyright 2026 The bbs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bbs/json_io.hpp"
#include "bbs/loci_stratum.hpp"

using namespace bbs;
namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string order_ideal;
    std::string border;
    std::string vars;
    std::string hf;
    std::string field = "QQ";
    std::string ordering = "DegRevLex";
    std::string output = "text";
    std::string out_file;
    std::string checkpoint_dir;
    double budget_seconds = 0;
    int max_degree = 0;
    int threads = 1;
    bool with_gb = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_order_ideal = true) {
    if (needs_order_ideal)
        cmd->add_option("--order-ideal", o.order_ideal, "comma-separated term list, e.g. \"1,x,y,x^2\"")
            ->required();
    cmd->add_option("--border", o.border, "explicit border term order (permutation of the true border)");
    cmd->add_option("--vars", o.vars, "ambient variables, e.g. \"x,y\" (default: inferred)");
    cmd->add_option("--field", o.field, "coefficient field: QQ or Fp:<p> (default QQ)");
    cmd->add_option("--ordering", o.ordering,
                    "term ordering for reduced-basis output (DegRevLex|DegLex|Lex)");
    cmd->add_option("--output", o.output, "text|json (default text)");
    cmd->add_option("--out", o.out_file, "write the result to a file instead of stdout");
    cmd->add_option("--budget-seconds", o.budget_seconds,
                    "wall-clock budget per Groebner call (default: env BBS_BUDGET_SECONDS or none)");
    cmd->add_option("--max-degree", o.max_degree, "degree cap for Groebner S-pairs");
    cmd->add_option("--threads", o.threads, "worker threads for enumeration");
    cmd->add_flag("--with-gb", o.with_gb, "include the reduced DegRevLex basis in ideal output");
    cmd->add_option("--checkpoint-dir", o.checkpoint_dir, "directory for resumable per-chart results");
}

Budget make_budget(const CommonOpts& o) {
    std::optional<int> deg;
    std::optional<double> secs;
    if (o.max_degree > 0) deg = o.max_degree;
    if (o.budget_seconds > 0) {
        secs = o.budget_seconds;
    } else if (const char* env = std::getenv("BBS_BUDGET_SECONDS")) {
        try {
            double v = std::stod(env);
            if (v > 0) secs = v;
        } catch (...) {
        }
    }
    return Budget::of(deg, secs);
}

std::vector<std::string> infer_vars(const CommonOpts& o) {
    if (!o.vars.empty()) {
        std::vector<std::string> names;
        std::stringstream ss(o.vars);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) names.push_back(item);
        return names;
    }
    static const std::vector<std::string> pool = {"x", "y", "z", "w"};
    size_t seen = 0;
    for (size_t k = 0; k < pool.size(); ++k) {
        if (o.order_ideal.find(pool[k]) != std::string::npos ||
            o.border.find(pool[k]) != std::string::npos)
            seen = k + 1;
    }
    // a Hilbert function prefix pins the embedding dimension from below
    if (!o.hf.empty()) {
        AffineHF H = AffineHF::parse(o.hf);
        size_t n_min = static_cast<size_t>(std::max<long>(1, H.value(1) - 1));
        seen = std::max(seen, n_min);
    }
    if (seen == 0) seen = 1;
    std::vector<std::string> names(pool.begin(), pool.begin() + std::min(seen, pool.size()));
    for (size_t k = pool.size(); k < seen; ++k) names.push_back("x" + std::to_string(k + 1));
    return names;
}

OrderIdeal parse_order_ideal(const CommonOpts& o) {
    return OrderIdeal::parse(o.order_ideal, infer_vars(o), o.border);
}

void emit(const CommonOpts& o, const ordered_json& doc, const std::string& text) {
    std::string payload = o.output == "json" ? doc.dump(2) + "\n" : text;
    if (o.out_file.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(o.out_file);
        out << payload;
    }
}

std::string ideal_text(const Ideal& I, bool with_gb, const Budget& budget,
                       const std::string& ordering = "DegRevLex") {
    std::ostringstream os;
    os << "generators (" << I.generators().size() << "):\n";
    for (const auto& g : I.generators()) os << "  " << g.to_string() << "\n";
    if (with_gb) {
        TermOrdering ord = TermOrdering::parse(ordering, I.ring().nvars());
        os << "reduced " << ord.name() << " basis:\n";
        for (const auto& g : I.groebner(ord, budget)) os << "  " << g.to_string() << "\n";
    }
    return os.str();
}

ordered_json ideal_doc(const Ideal& I, const CommonOpts& o, const Budget& budget) {
    ordered_json j = ideal_to_json(I, false, budget);
    if (o.with_gb) {
        TermOrdering ord = TermOrdering::parse(o.ordering, I.ring().nvars());
        ordered_json gb = ordered_json::array();
        for (const auto& g : I.groebner(ord, budget)) gb.push_back(poly_to_json(g));
        j["gb"]["ordering"] = ord.name();
        j["gb"]["gens"] = std::move(gb);
    }
    return j;
}

// Content key of a job for checkpoint file naming (FNV-1a).
std::string job_key(const std::string& desc) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : desc) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

int run_scheme_ideal(const CommonOpts& o, const std::string& flavor_name_str) {
    Budget budget = make_budget(o);
    SchemeContext S(parse_order_ideal(o), Field::parse(o.field));
    Flavor flavor = parse_flavor(flavor_name_str);
    const Ideal& I = S.defining_ideal(flavor);
    ordered_json doc;
    doc["command"] = "scheme-ideal";
    doc["order_ideal"] = order_ideal_to_json(S.order_ideal());
    doc["flavor"] = flavor_name(flavor);
    doc["ideal"] = ideal_doc(I, o, budget);
    std::ostringstream text;
    text << "order ideal: " << S.order_ideal().to_string() << "\n"
         << "border: ";
    Ring xr(S.order_ideal().xvars(), Field::rationals());
    for (int j = 0; j < S.nu(); ++j)
        text << (j ? "," : "") << S.order_ideal().border_term(j).to_string(xr);
    text << "\nflavor: " << flavor_name(flavor) << "\n"
         << ideal_text(I, o.with_gb, budget, o.ordering);
    emit(o, doc, text.str());
    return 0;
}

int run_matrices(const CommonOpts& o, const std::string& flavor_name_str) {
    SchemeContext S(parse_order_ideal(o), Field::parse(o.field));
    Flavor flavor = parse_flavor(flavor_name_str);
    const auto& mats = S.generic_matrices(flavor);
    ordered_json doc;
    doc["command"] = "matrices";
    doc["order_ideal"] = order_ideal_to_json(S.order_ideal());
    doc["flavor"] = flavor_name(flavor);
    ordered_json arr = ordered_json::array();
    for (const auto& m : mats) arr.push_back(matrix_to_json(m));
    doc["matrices"] = std::move(arr);
    std::ostringstream text;
    for (int r = 0; r < S.n(); ++r) {
        text << "A_" << S.order_ideal().xvars()[r] << ":\n";
        for (int i = 0; i < S.mu(); ++i) {
            for (int j = 0; j < S.mu(); ++j) text << (j ? "  " : "  [") << mats[r].at(i, j).to_string();
            text << "]\n";
        }
    }
    emit(o, doc, text.str());
    return 0;
}

int run_locus_df(const CommonOpts& o, const std::string& kind_str) {
    Budget budget = make_budget(o);
    SchemeContext S(parse_order_ideal(o), Field::parse(o.field));
    LocusKind kind = parse_locus_kind(kind_str);
    LocusIdeal L = compute_locus_df(kind, S, budget);
    ordered_json doc;
    doc["command"] = "locus-df";
    doc["kind"] = locus_kind_name(kind);
    doc["order_ideal"] = order_ideal_to_json(S.order_ideal());
    doc["base"] = ideal_to_json(L.base);
    doc["extra"] = ideal_doc(L.extra, o, budget);
    doc["full"] = ideal_to_json(L.full);
    std::ostringstream text;
    text << "locus-df " << locus_kind_name(kind) << " on " << S.order_ideal().to_string() << "\n"
         << "base ideal has " << L.base.generators().size() << " generators\n"
         << "extra ideal:\n"
         << ideal_text(L.extra, o.with_gb, budget, o.ordering);
    emit(o, doc, text.str());
    return 0;
}

int run_stratum(const CommonOpts& o, const std::string& which) {
    Budget budget = make_budget(o);
    SchemeContext S(parse_order_ideal(o), Field::parse(o.field));
    AffineHF H = AffineHF::parse(o.hf);
    Ideal I = which == "closure" ? closure_stratum_ideal(S, H, budget) : boundary_ideal(S, H, budget);
    ordered_json doc;
    doc["command"] = "stratum";
    doc["which"] = which;
    doc["hf"] = H.to_string();
    doc["ideal"] = ideal_doc(I, o, budget);
    emit(o, doc, "stratum " + which + " for H = " + H.to_string() + "\n" +
                     ideal_text(I, o.with_gb, budget, o.ordering));
    return 0;
}

int run_strata(const CommonOpts& o) {
    OrderIdeal O = parse_order_ideal(o);
    auto strata = all_strata(O);
    ordered_json doc;
    doc["command"] = "strata";
    doc["order_ideal"] = order_ideal_to_json(O);
    ordered_json arr = ordered_json::array();
    std::ostringstream text;
    for (const auto& h : strata) {
        arr.push_back(h.to_string());
        text << h.to_string() << "\n";
    }
    doc["strata"] = std::move(arr);
    emit(o, doc, text.str());
    return 0;
}

int run_order_ideals(const CommonOpts& o) {
    AffineHF H = AffineHF::parse(o.hf);
    std::vector<std::string> vars = infer_vars(o);
    auto list = order_ideals_with_hf(H, static_cast<int>(vars.size()), vars);
    ordered_json doc;
    doc["command"] = "order-ideals";
    doc["hf"] = H.to_string();
    ordered_json arr = ordered_json::array();
    std::ostringstream text;
    for (const auto& O : list) {
        arr.push_back(order_ideal_to_json(O));
        text << O.to_string() << "\n";
    }
    doc["order_ideals"] = std::move(arr);
    emit(o, doc, text.str());
    return 0;
}

int run_dfb(const CommonOpts& o, const std::string& oprime) {
    Budget budget = make_budget(o);
    SchemeContext S(parse_order_ideal(o), Field::parse(o.field));
    OrderIdeal Op = OrderIdeal::parse(oprime, S.order_ideal().xvars());
    DfbResult d = dfb_subscheme(S, Op, budget);
    ordered_json doc;
    doc["command"] = "dfb";
    doc["order_ideal"] = order_ideal_to_json(S.order_ideal());
    doc["oprime"] = order_ideal_to_json(Op);
    doc["closure"] = ideal_to_json(d.closure);
    doc["boundary"] = ideal_to_json(d.boundary);
    doc["delta"] = poly_to_json(d.delta);
    std::ostringstream text;
    text << "delta = " << d.delta.to_string() << "\n"
         << "closure: " << d.closure.generators().size() << " generators, boundary: "
         << d.boundary.generators().size() << " generators\n";
    emit(o, doc, text.str());
    return 0;
}

int run_locus_stratum(const CommonOpts& o, const std::string& kind_str, const std::string& assemble) {
    Budget budget = make_budget(o);
    SchemeContext S(parse_order_ideal(o), Field::parse(o.field));
    AffineHF H = AffineHF::parse(o.hf);
    LocusKind kind = parse_locus_kind(kind_str);

    CombineHooks hooks;
    std::string key = job_key(locus_kind_name(kind) + "|" + S.order_ideal().to_string() + "|" +
                              H.to_string() + "|" + o.field);
    if (!o.checkpoint_dir.empty()) {
        fs::create_directories(o.checkpoint_dir);
        Field field = Field::parse(o.field);
        std::string dir = o.checkpoint_dir;
        hooks.try_load = [dir, key, field](int index, const OrderIdeal&) -> std::optional<LocusTriple> {
            fs::path p = fs::path(dir) / (key + "_" + std::to_string(index) + ".json");
            if (!fs::exists(p)) return std::nullopt;
            std::ifstream in(p);
            ordered_json j = ordered_json::parse(in);
            return triple_from_json(j, field);
        };
        hooks.on_done = [dir, key](int index, const LocusTriple& t) {
            fs::path p = fs::path(dir) / (key + "_" + std::to_string(index) + ".json");
            std::ofstream out(p);
            out << triple_to_json(t).dump(2) << "\n";
        };
    }

    StratumLocus locus = compute_locus_stratum(kind, S, H, budget,
                                               o.checkpoint_dir.empty() ? nullptr : &hooks);
    Ideal assembled = assemble_stratum_locus(locus, parse_assemble_mode(assemble), budget);

    ordered_json doc;
    doc["command"] = "locus";
    doc["kind"] = locus_kind_name(kind);
    doc["hf"] = H.to_string();
    doc["symmetric_failure"] = locus.symmetric_failure;
    ordered_json triples = ordered_json::array();
    for (const auto& t : locus.triples) triples.push_back(triple_to_json(t));
    doc["triples"] = std::move(triples);
    doc["closure"] = ideal_to_json(locus.closure);
    doc["boundary"] = ideal_to_json(locus.boundary);
    doc["assembled"] = ideal_doc(assembled, o, budget);
    std::ostringstream text;
    text << "locus " << locus_kind_name(kind) << " on the stratum H = " << H.to_string() << "\n";
    if (locus.symmetric_failure) text << "Castelnuovo function not symmetric: locus is empty\n";
    text << locus.triples.size() << " chart triples\n";
    for (const auto& t : locus.triples)
        text << "  chart " << t.o_prime.to_string() << ": delta = " << t.delta.to_string() << ", J has "
             << t.j.generators().size() << " generators\n";
    text << "assembled ideal:\n" << ideal_text(assembled, o.with_gb, budget, o.ordering);
    emit(o, doc, text.str());
    return 0;
}

int run_check(const CommonOpts& o, const std::string& kind, const std::string& ideal_file) {
    Budget budget = make_budget(o);
    std::ifstream in(ideal_file);
    if (!in) throw InputError("cannot open ideal file '" + ideal_file + "'");
    ordered_json doc_in = ordered_json::parse(in);
    Ideal I = ideal_from_json(doc_in.contains("ideal") ? doc_in.at("ideal") : doc_in);
    CheckResult res = kind == "scb" ? check_scb(I, budget) : check_sgor(I, budget);
    ordered_json doc;
    doc["command"] = "check";
    doc["kind"] = kind;
    doc["result"] = res.value;
    doc["order_ideal"] = order_ideal_to_json(res.O);
    if (res.det) doc["det"] = res.det->to_string();
    std::ostringstream text;
    text << "check " << kind << ": " << (res.value ? "TRUE" : "FALSE") << "\n"
         << "degree filtered basis: " << res.O.to_string() << "\n";
    if (res.det) text << "det(V) = " << res.det->to_string() << "\n";
    emit(o, doc, text.str());
    return 0;
}

int run_oracle_enumerate(const CommonOpts& o, long prime, long long state_budget) {
    OrderIdeal O = parse_order_ideal(o);
    auto pts = enumerate_points(O, prime, state_budget, o.threads);
    ordered_json doc;
    doc["command"] = "oracle-enumerate";
    doc["order_ideal"] = order_ideal_to_json(O);
    doc["prime"] = prime;
    doc["count"] = pts.size();
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p));
    doc["points"] = std::move(arr);
    std::ostringstream text;
    text << pts.size() << " points on the scheme over F_" << prime << "\n";
    emit(o, doc, text.str());
    return 0;
}

int run_oracle_points(const CommonOpts& o, const std::string& points_file) {
    Budget budget = make_budget(o);
    std::ifstream in(points_file);
    if (!in) throw InputError("cannot open points file '" + points_file + "'");
    ordered_json j = ordered_json::parse(in);
    std::vector<std::string> vars = infer_vars(o);
    if (o.vars.empty() && o.order_ideal.empty() && !j.empty())
        vars = std::vector<std::string>{"x", "y", "z", "w"}.size() >= j.at(0).size()
                   ? std::vector<std::string>(std::vector<std::string>{"x", "y", "z", "w"}.begin(),
                                              std::vector<std::string>{"x", "y", "z", "w"}.begin() +
                                                  j.at(0).size())
                   : vars;
    Field field = Field::parse(o.field);
    Ring xr(vars, field);
    auto pts = points_from_json(j, field, static_cast<int>(vars.size()));
    std::optional<OrderIdeal> target;
    if (!o.order_ideal.empty()) target = OrderIdeal::parse(o.order_ideal, vars, o.border);
    BMResult bm = buchberger_moller(pts, xr, target);
    ordered_json doc;
    doc["command"] = "oracle-points";
    doc["ideal"] = ideal_doc(bm.ideal, o, budget);
    doc["quotient_basis"] = order_ideal_to_json(bm.quotient_basis);
    if (bm.point) doc["point"] = point_to_json(*bm.point);
    std::ostringstream text;
    text << "vanishing ideal (reduced DegRevLex basis):\n";
    for (const auto& g : bm.ideal.generators()) text << "  " << g.to_string() << "\n";
    if (o.with_gb) {
        TermOrdering ord2 = TermOrdering::parse(o.ordering, xr.nvars());
        text << "reduced " << ord2.name() << " basis:\n";
        for (const auto& g : bm.ideal.groebner(ord2, budget)) text << "  " << g.to_string() << "\n";
    }
    text << "quotient basis: " << bm.quotient_basis.to_string() << "\n";
    emit(o, doc, text.str());
    return 0;
}

int run_ingest(const CommonOpts& o, const std::string& file) {
    // reparse our own JSON output and re-emit the ideal block (round-trip check)
    std::ifstream in(file);
    if (!in) throw InputError("cannot open file '" + file + "'");
    ordered_json j = ordered_json::parse(in);
    Ideal I = ideal_from_json(j.contains("ideal") ? j.at("ideal") : j);
    ordered_json doc = ideal_to_json(I);
    emit(o, doc, ideal_text(I, false, Budget::unlimited()));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"border basis scheme toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string flavor = "full", kind, which, oprime, assemble = "product", file;
    long prime = 2;
    long long state_budget = 1 << 20;

    auto* scheme_ideal = app.add_subcommand("scheme-ideal", "defining ideal of B_O (full/df/hom)");
    add_common(scheme_ideal, o);
    scheme_ideal->add_option("--flavor", flavor, "full|df|hom");

    auto* matrices = app.add_subcommand("matrices", "generic multiplication matrices");
    add_common(matrices, o);
    matrices->add_option("--flavor", flavor, "full|df|hom");

    auto* locus_df = app.add_subcommand("locus-df", "locus inside B_O^df (or B_O for lgor)");
    add_common(locus_df, o);
    locus_df->add_option("kind", kind, "lgor|cb|scb|sgor|sci")->required();

    auto* stratum = app.add_subcommand("stratum", "closure / boundary ideal of a Hilbert stratum");
    add_common(stratum, o);
    stratum->add_option("which", which, "closure|boundary")->required();
    stratum->add_option("--hf", o.hf, "affine Hilbert function prefix, e.g. \"1,3,5\"")->required();

    auto* strata = app.add_subcommand("strata", "all admissible Hilbert strata of B_O");
    add_common(strata, o);

    auto* order_ideals = app.add_subcommand("order-ideals", "order ideals with a given Hilbert function");
    add_common(order_ideals, o, false);
    order_ideals->add_option("--hf", o.hf, "affine Hilbert function prefix")->required();

    auto* dfb = app.add_subcommand("dfb", "DFB subscheme data for a second order ideal");
    add_common(dfb, o);
    dfb->add_option("--oprime", oprime, "the alternative order ideal")->required();

    auto* locus = app.add_subcommand("locus", "locus inside the Hilbert stratum B_O(H)");
    add_common(locus, o);
    locus->add_option("kind", kind, "cb|scb|sgor|sci")->required();
    locus->add_option("--hf", o.hf, "affine Hilbert function prefix")->required();
    locus->add_option("--assemble", assemble, "product|intersection (default product)");

    auto* check = app.add_subcommand("check", "per-scheme strict CB / strict Gorenstein check");
    add_common(check, o, false);
    check->add_option("kind", kind, "scb|sgor")->required();
    check->add_option("--ideal-file", file, "JSON ideal file")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
    auto* oracle_enum = oracle->add_subcommand("enumerate", "all F_p points of B_O");
    add_common(oracle_enum, o);
    oracle_enum->add_option("--prime", prime, "field characteristic")->required();
    oracle_enum->add_option("--state-budget", state_budget, "max p^(mu nu) states (default 2^20)");
    auto* oracle_pts = oracle->add_subcommand("points", "vanishing ideal of a point set");
    add_common(oracle_pts, o, false);
    oracle_pts->add_option("--points-file", file, "JSON array of coordinate arrays")->required();
    oracle_pts->add_option("--order-ideal", o.order_ideal,
                           "extract the border basis point for this order ideal");

    auto* ingest = app.add_subcommand("ingest", "reparse our own JSON ideal output (round-trip check)");
    add_common(ingest, o, false);
    ingest->add_option("--file", file, "JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (scheme_ideal->parsed()) return run_scheme_ideal(o, flavor);
        if (matrices->parsed()) return run_matrices(o, flavor);
        if (locus_df->parsed()) return run_locus_df(o, kind);
        if (stratum->parsed()) return run_stratum(o, which);
        if (strata->parsed()) return run_strata(o);
        if (order_ideals->parsed()) return run_order_ideals(o);
        if (dfb->parsed()) return run_dfb(o, oprime);
        if (locus->parsed()) return run_locus_stratum(o, kind, assemble);
        if (check->parsed()) return run_check(o, kind, file);
        if (oracle->parsed()) {
            if (oracle_enum->parsed()) return run_oracle_enumerate(o, prime, state_budget);
            if (oracle_pts->parsed()) return run_oracle_points(o, file);
            std::cerr << "oracle needs a subcommand (enumerate|points)\n";
            return 1;
        }
        if (ingest->parsed()) return run_ingest(o, file);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n"
                  << "(restartable: raise --budget-seconds / --max-degree"
                  << (o.checkpoint_dir.empty() ? "" : "; completed charts were checkpointed") << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
