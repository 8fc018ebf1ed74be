#include <algorithm>
#include <chrono>
#include <sstream>

#include "diffalg/classify.hpp"
#include "diffalg/derivation.hpp"
#include "diffalg/frobenius.hpp"
#include "diffalg/kaehler.hpp"
#include "diffalg/scenario.hpp"

namespace diffalg {

namespace {

using scenario_detail::split_list;
using scenario_detail::unquote;

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string poly_list_str(std::vector<Polynomial> polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.to_string());
    std::sort(out.begin(), out.end());
    std::string joined;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i) joined += ", ";
        joined += out[i];
    }
    return "\"" + joined + "\"";
}

// per-scenario engine state shared between tasks
struct RunContext {
    const Scenario& scenario;
    RunOptions opts;
    QRPtr ring;
    long cutoff = 0;
    int default_ext_bound = 0;

    std::map<std::string, Derivation> verified;
    std::optional<DerModule> der_cache;

    explicit RunContext(const Scenario& s, const RunOptions& o) : scenario(s), opts(o) {
        std::optional<MonomialOrder> order;
        if (s.order == "lex") order = s.ring->lex_order();
        ring = QuotientRing::make(s.ring, s.ideal, order, s.is_domain);
        // artinian windows clamp themselves to their natural top, so the
        // bound only matters for positive-dimensional graded rings
        cutoff = ring->is_artinian() ? (1L << 20) : scaled_cutoff(*ring, o.bound);
        default_ext_bound = ring->is_artinian() ? o.ext_bound_artinian : o.ext_bound_graded;
    }

    Polynomial parse(const std::string& text) const {
        return parse_polynomial(unquote(text), scenario.ring);
    }

    std::vector<Polynomial> parse_list(const std::string& value) const {
        std::vector<Polynomial> out;
        for (const auto& piece : split_list(value)) out.push_back(parse(piece));
        return out;
    }

    const Derivation& derivation(const std::string& name) {
        auto it = verified.find(name);
        if (it != verified.end()) return it->second;
        const auto* images = scenario.derivation_images(name);
        if (!images) throw algebra_error("unknown derivation '" + name + "'");
        auto check = WellDefinedCheck::run(ring, *images, name);
        if (!check.ok())
            throw algebra_error("derivation '" + name + "' is not well defined on this ring");
        return verified.emplace(name, *check.derivation).first->second;
    }

    std::vector<Derivation> derivation_list(const std::string& value) {
        std::vector<Derivation> out;
        for (const auto& name : split_list(value)) out.push_back(derivation(name));
        return out;
    }

    const DerModule& der() {
        if (!der_cache) der_cache = der_module(ring, cutoff);
        return *der_cache;
    }

    PresentedModule module_for(const TaskSpec& t) {
        const std::string& kind = t.get("module");
        if (kind == "omega") return omega_presentation(ring);
        if (kind == "der") return der().module;
        if (kind == "k") return PresentedModule::residue_field(ring);
        if (kind == "R") return PresentedModule::free_module(ring, 1);
        if (kind == "ideal") return ideal_module(ring, parse_list(t.get("gens")), cutoff);
        throw algebra_error("unknown module spec '" + kind + "'");
    }

    int ext_bound_for(const TaskSpec& t) const {
        return t.has("ext_bound") ? std::stoi(t.get("ext_bound")) : default_ext_bound;
    }
};

// expectation bookkeeping: PASS iff every provided expect_* matched
struct Expectations {
    bool any = false;
    bool ok = true;

    void check(bool matched) {
        any = true;
        ok = ok && matched;
    }
    std::string status() const { return any ? (ok ? "PASS" : "FAIL") : "INFO"; }
};

void fact(TaskOutcome& out, const std::string& key, const std::string& value) {
    out.facts.emplace_back(key, value);
}

long total_dim(const QuotientRing& ring, const PresentedModule& m, long cutoff) {
    Realization real(m);
    long hi = cutoff;
    if (ring.is_artinian()) {
        long top = 0;
        for (long t : m.gen_degrees()) top = std::max(top, t);
        hi = top + ring.top_degree();
    }
    return real.total_dim_through(hi);
}

void run_task(RunContext& ctx, const TaskSpec& t, TaskOutcome& out) {
    Expectations exp;
    const QRPtr& ring = ctx.ring;

    if (t.kind == "derivation_well_defined") {
        const auto* images = ctx.scenario.derivation_images(t.get("derivation"));
        if (!images) throw algebra_error("unknown derivation '" + t.get("derivation") + "'");
        auto check = WellDefinedCheck::run(ring, *images, t.get("derivation"));
        fact(out, "well_defined", bool_str(check.ok()));
        if (!check.ok()) {
            fact(out, "failing_generator",
                 ring->ideal_generators()[check.failing_generator].to_string());
            fact(out, "residue", check.residue->to_string());
        }
        if (t.has("expect_well_defined"))
            exp.check(bool_str(check.ok()) == t.get("expect_well_defined"));
    } else if (t.kind == "apply_derivation") {
        const Derivation& d = ctx.derivation(t.get("derivation"));
        Polynomial result = d.apply(ctx.parse(t.get("element")));
        fact(out, "result", result.to_string());
        if (t.has("expect_result"))
            exp.check(result == ring->nf(ctx.parse(t.get("expect_result"))));
    } else if (t.kind == "maximally_differential") {
        std::vector<Derivation> ds = ctx.derivation_list(t.get("derivations"));
        MaxDiffMode mode = MaxDiffMode::automatic;
        std::string mode_name = t.has("mode") ? t.get("mode") : "auto";
        if (mode_name == "shortcut") mode = MaxDiffMode::shortcut;
        else if (mode_name == "fixpoint") mode = MaxDiffMode::fixpoint;
        else if (mode_name == "verify") mode = MaxDiffMode::verify;
        else if (mode_name != "auto") throw algebra_error("unknown mode '" + mode_name + "'");
        std::vector<Polynomial> candidate;
        if (t.has("candidate")) candidate = ctx.parse_list(t.get("candidate"));
        MaxDiffResult b = maximally_differential_ideal(ring, ds, mode,
                                                       t.has("candidate") ? &candidate : nullptr);
        const char* used = b.mode_used == MaxDiffMode::shortcut   ? "shortcut"
                           : b.mode_used == MaxDiffMode::fixpoint ? "fixpoint"
                                                                  : "verify";
        fact(out, "mode", used);
        fact(out, "generators", poly_list_str(b.generators));
        fact(out, "certified", bool_str(b.certified));
        if (b.quotient_length) fact(out, "quotient_length", std::to_string(*b.quotient_length));
        if (t.has("expect_generators"))
            exp.check(b.certified &&
                      same_r_ideal(ring, b.generators, ctx.parse_list(t.get("expect_generators"))));
        if (t.has("expect_quotient_length"))
            exp.check(b.quotient_length &&
                      std::to_string(*b.quotient_length) == t.get("expect_quotient_length"));
        if (t.has("expect_mode")) exp.check(used == t.get("expect_mode"));
    } else if (t.kind == "differential_ideal") {
        bool diff = is_differential_ideal(ring, ctx.parse_list(t.get("ideal")),
                                          ctx.derivation_list(t.get("derivations")));
        fact(out, "differential", bool_str(diff));
        if (t.has("expect")) exp.check(bool_str(diff) == t.get("expect"));
    } else if (t.kind == "socle") {
        SocleResult s = socle(ring);
        fact(out, "dim", std::to_string(s.dim));
        fact(out, "generators", poly_list_str(s.basis));
        if (t.has("expect_dim")) exp.check(std::to_string(s.dim) == t.get("expect_dim"));
        if (t.has("expect_generators"))
            exp.check(poly_list_str(s.basis) ==
                      poly_list_str(ctx.parse_list(t.get("expect_generators"))));
    } else if (t.kind == "gorenstein") {
        bool g = is_gorenstein_artinian(ring);
        fact(out, "gorenstein", bool_str(g));
        if (t.has("expect")) exp.check(bool_str(g) == t.get("expect"));
    } else if (t.kind == "embdim") {
        long e = embedding_dimension(ring);
        bool f41 = fact_embdim_is_dim_plus_one(ring);
        fact(out, "embdim", std::to_string(e));
        fact(out, "fact41", bool_str(f41));
        if (t.has("expect")) exp.check(std::to_string(e) == t.get("expect"));
        if (t.has("expect_fact41")) exp.check(bool_str(f41) == t.get("expect_fact41"));
    } else if (t.kind == "krull_dim") {
        fact(out, "dim", std::to_string(ring->krull_dim()));
        if (t.has("expect")) exp.check(std::to_string(ring->krull_dim()) == t.get("expect"));
    } else if (t.kind == "length") {
        fact(out, "length", std::to_string(ring->length()));
        if (t.has("expect")) exp.check(std::to_string(ring->length()) == t.get("expect"));
    } else if (t.kind == "depth") {
        DepthResult d = depth_graded(ring, ctx.cutoff);
        fact(out, "depth", std::to_string(d.value));
        fact(out, "certified", bool_str(d.certified));
        fact(out, "witness", "\"" + d.note + "\"");
        if (t.has("expect")) exp.check(d.certified && std::to_string(d.value) == t.get("expect"));
    } else if (t.kind == "mu") {
        std::vector<Polynomial> gens = ctx.parse_list(t.get("ideal"));
        bool ambient = t.has("where") && t.get("where") == "ambient";
        std::vector<Polynomial> background = ambient ? std::vector<Polynomial>{}
                                                     : ring->ideal_generators();
        auto mins = minimal_generators(ring->poly_ring(), gens, background);
        fact(out, "mu", std::to_string(mins.size()));
        fact(out, "minimal_generators", poly_list_str(mins));
        if (t.has("expect")) exp.check(std::to_string(mins.size()) == t.get("expect"));
    } else if (t.kind == "complete_intersection") {
        CIResult c = is_complete_intersection_ideal(ctx.parse_list(t.get("ideal")), ring,
                                                    ctx.cutoff);
        fact(out, "ci", bool_str(c.is_ci));
        fact(out, "reason", "\"" + c.reason + "\"");
        if (t.has("expect")) exp.check(bool_str(c.is_ci) == t.get("expect"));
        if (t.has("expect_reason")) exp.check(c.reason == unquote(t.get("expect_reason")));
    } else if (t.kind == "ci_presentation") {
        CIPresentationResult c = ci_presentation_check(ring);
        const char* verdict = c.verdict == CIPresentation::complete_intersection
                                  ? "complete_intersection"
                                  : (c.verdict == CIPresentation::almost_ci ? "almost_ci"
                                                                            : "neither");
        fact(out, "verdict", verdict);
        fact(out, "mu", std::to_string(c.mu));
        fact(out, "height", std::to_string(c.height));
        if (t.has("expect")) exp.check(verdict == t.get("expect"));
        if (t.has("expect_mu")) exp.check(std::to_string(c.mu) == t.get("expect_mu"));
        if (t.has("expect_height")) exp.check(std::to_string(c.height) == t.get("expect_height"));
    } else if (t.kind == "omega") {
        PresentedModule omega = omega_presentation(ring);
        bool rel_zero = omega_relations_all_zero(ring);
        long mu = minimal_generator_count(omega);
        fact(out, "relations_zero", bool_str(rel_zero));
        fact(out, "mu", std::to_string(mu));
        if (t.has("expect_relations_zero"))
            exp.check(bool_str(rel_zero) == t.get("expect_relations_zero"));
        if (t.has("expect_mu")) exp.check(std::to_string(mu) == t.get("expect_mu"));
        if (t.has("expect_rank_over_fraction_field")) {
            long rk = module_rank(omega);
            fact(out, "rank_over_fraction_field", std::to_string(rk));
            exp.check(std::to_string(rk) == t.get("expect_rank_over_fraction_field"));
        }
        if (t.has("expect_free")) {
            FreenessCertificate cert = is_free_module(omega, ctx.cutoff);
            fact(out, "free", bool_str(cert.free));
            fact(out, "free_detail", "\"" + cert.detail + "\"");
            if (cert.free) fact(out, "rank", std::to_string(cert.rank));
            exp.check(bool_str(cert.free) == t.get("expect_free"));
            if (t.has("expect_rank"))
                exp.check(cert.free && std::to_string(cert.rank) == t.get("expect_rank"));
        }
    } else if (t.kind == "der") {
        const DerModule& der = ctx.der();
        long dim = total_dim(*ring, der.module, ctx.cutoff);
        fact(out, "dim", std::to_string(dim));
        fact(out, "routes_agree", bool_str(der.routes_agree));
        if (t.has("expect_dim")) exp.check(std::to_string(dim) == t.get("expect_dim"));
        if (t.has("expect_free")) {
            FreenessCertificate cert = is_free_module(der.module, ctx.cutoff);
            fact(out, "free", bool_str(cert.free));
            if (cert.free) fact(out, "rank", std::to_string(cert.rank));
            exp.check(bool_str(cert.free) == t.get("expect_free"));
            if (t.has("expect_rank"))
                exp.check(cert.free && std::to_string(cert.rank) == t.get("expect_rank"));
        }
        bool want_coker = t.has("expect_coker_dim") || t.has("expect_coker_killed_by_m");
        if (want_coker) {
            std::vector<long> ambient;
            for (int w : ring->poly_ring()->weights()) ambient.push_back(-static_cast<long>(w));
            PresentedModule coker(ring, ambient, der.generator_vectors);
            long cdim = total_dim(*ring, coker, ctx.cutoff);
            fact(out, "coker_dim", std::to_string(cdim));
            if (t.has("expect_coker_dim")) exp.check(std::to_string(cdim) == t.get("expect_coker_dim"));
            if (t.has("expect_coker_killed_by_m")) {
                Realization rc(coker);
                long hi = ring->is_artinian() ? ring->top_degree() + 1 : ctx.cutoff;
                bool killed = true;
                for (long d = rc.min_degree(); d <= hi; ++d)
                    for (std::size_t v = 0; v < ring->nvars() && killed; ++v) {
                        KMatrix m = rc.mult_matrix(ring->variable(v), d);
                        for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
                            for (std::size_t c2 = 0; c2 < m.cols(); ++c2)
                                if (!m.at(r2, c2).is_zero()) killed = false;
                    }
                fact(out, "coker_killed_by_m", bool_str(killed));
                exp.check(bool_str(killed) == t.get("expect_coker_killed_by_m"));
            }
        }
        if (t.has("expect_equals_m_times_free")) {
            // Der = m R^n: component constants vanish and dimensions match
            bool inside = true;
            for (const auto& v : der.generator_vectors)
                for (const auto& comp : v)
                    if (!comp.constant_coefficient().is_zero()) inside = false;
            long m_dim = ring->is_artinian() ? ring->length() - 1 : -1;
            bool equal = inside && m_dim >= 0 &&
                         dim == static_cast<long>(ring->nvars()) * m_dim;
            fact(out, "equals_m_times_free", bool_str(equal));
            exp.check(bool_str(equal) == t.get("expect_equals_m_times_free"));
        }
    } else if (t.kind == "ext") {
        PresentedModule m = ctx.module_for(t);
        FreeResolution res(m, ctx.cutoff);
        int raw_i = std::stoi(t.get("i"));
        if (raw_i < 1 || raw_i > 64) throw algebra_error("ext index must be between 1 and 64");
        std::size_t i = static_cast<std::size_t>(raw_i);
        GradedDims e = ext_dims(res, i, ctx.cutoff);
        fact(out, "dim", std::to_string(e.total));
        fact(out, "zero", bool_str(e.is_zero()));
        fact(out, "complete", bool_str(e.complete));
        if (t.has("expect_dim")) exp.check(std::to_string(e.total) == t.get("expect_dim"));
        if (t.has("expect_zero")) exp.check(bool_str(e.is_zero()) == t.get("expect_zero"));
        if (t.has("expect_nonzero")) exp.check(bool_str(!e.is_zero()) == t.get("expect_nonzero"));
    } else if (t.kind == "tor") {
        PresentedModule m = ctx.module_for(t);
        if (t.has("against") && t.get("against") != "k")
            throw algebra_error("tor tasks support against = k only");
        FreeResolution res(m, ctx.cutoff);
        int raw_i = std::stoi(t.get("i"));
        if (raw_i < 1 || raw_i > 64) throw algebra_error("tor index must be between 1 and 64");
        std::size_t i = static_cast<std::size_t>(raw_i);
        GradedDims e = tor_dims(res, PresentedModule::residue_field(ring), i, ctx.cutoff);
        fact(out, "dim", std::to_string(e.total));
        if (t.has("expect_dim")) exp.check(std::to_string(e.total) == t.get("expect_dim"));
    } else if (t.kind == "totally_reflexive") {
        PresentedModule m = ctx.module_for(t);
        int n = ctx.ext_bound_for(t);
        TRCertificate cert = totally_reflexive_check(m, n, ctx.cutoff);
        fact(out, "result", cert.pass ? "PASS" : "FAIL");
        fact(out, "ext_bound", std::to_string(cert.ext_bound));
        fact(out, "absolute", bool_str(cert.absolute));
        if (!cert.pass) fact(out, "stage", "\"" + cert.stage + "\"");
        if (t.has("expect")) exp.check((cert.pass ? "PASS" : "FAIL") == t.get("expect"));
    } else if (t.kind == "gdim") {
        PresentedModule m = ctx.module_for(t);
        int n = ctx.ext_bound_for(t);
        int depth_search = t.has("search_depth") ? std::stoi(t.get("search_depth")) : 3;
        GdimEvidence e = gdim_evidence(m, n, ctx.cutoff, depth_search);
        const char* kind = e.kind == GdimEvidence::Kind::zero      ? "zero"
                           : e.kind == GdimEvidence::Kind::at_most ? "at_most"
                                                                   : "obstructed";
        fact(out, "kind", kind);
        fact(out, "level", std::to_string(e.level));
        fact(out, "ext_bound", std::to_string(e.ext_bound));
        fact(out, "note", "\"" + e.note + "\"");
        if (t.has("expect_kind")) exp.check(kind == t.get("expect_kind"));
        if (t.has("expect_level")) exp.check(std::to_string(e.level) == t.get("expect_level"));
        if (t.has("expect_level_at_most"))
            exp.check(e.level <= std::stoi(t.get("expect_level_at_most")));
    } else if (t.kind == "frobenius") {
        int n_max = t.has("n_max") ? std::stoi(t.get("n_max")) : ctx.opts.frobenius_max;
        FrobeniusReport report;
        std::string complex_kind = t.has("complex") ? t.get("complex") : "identity";
        if (complex_kind == "identity") {
            PresentedModule m = ctx.module_for(t);
            PresentedComplex c;
            c.ring = ring;
            c.modules = {m, m};
            std::vector<long> tw(m.gen_degrees().begin(), m.gen_degrees().end());
            c.maps = {ModuleMap::identity(ring, tw)};
            report = frobenius_acyclicity(c, n_max, ctx.cutoff);
            report.presentation_note = "identity complex on the module presentation";
        } else if (complex_kind == "koszul") {
            Polynomial f = ctx.parse(t.get("element"));
            auto deg = ring->nf(f).homogeneous_degree();
            if (!deg) throw algebra_error("koszul element must be homogeneous and nonzero");
            FreeComplex c;
            c.ring = ring;
            c.twists = {{0}, {*deg}};
            c.diffs = {ModuleMap(ring, {0}, {*deg}, {RVector{f}})};
            report = frobenius_acyclicity(c, n_max, ctx.cutoff);
            report.presentation_note = "koszul complex on " + f.to_string();
        } else {
            throw algebra_error("unknown complex kind '" + complex_kind + "'");
        }
        fact(out, "acyclic", bool_str(report.acyclic()));
        for (const auto& e : report.entries)
            fact(out, "h_n" + std::to_string(e.n) + "_i" + std::to_string(e.position),
                 std::to_string(e.h_dim));
        if (t.has("expect_acyclic")) exp.check(bool_str(report.acyclic()) == t.get("expect_acyclic"));
    } else if (t.kind == "complex_check") {
        // explicit free complex: F_0 twists + differential matrices
        std::vector<long> t0;
        if (t.has("twists0"))
            for (const auto& w : split_list(t.get("twists0"))) t0.push_back(std::stol(w));
        FreeComplex c;
        c.ring = ring;
        std::vector<std::vector<long>> twists;
        std::vector<ModuleMap> diffs;
        std::vector<long> current = t0;
        twists.push_back(current);
        for (int k = 1;; ++k) {
            std::string key = "d" + std::to_string(k);
            if (!t.has(key)) break;
            // rows split by ';', entries by ','
            std::vector<RVector> cols;
            std::vector<std::vector<Polynomial>> rows;
            for (const auto& row_text : [&] {
                     std::vector<std::string> rows_s;
                     std::string cur;
                     for (char ch : unquote(t.get(key))) {
                         if (ch == ';') {
                             rows_s.push_back(cur);
                             cur.clear();
                         } else
                             cur += ch;
                     }
                     rows_s.push_back(cur);
                     return rows_s;
                 }()) {
                std::vector<Polynomial> row;
                for (const auto& cell : split_list(row_text)) row.push_back(ctx.parse(cell));
                rows.push_back(std::move(row));
            }
            if (rows.empty() || rows.size() != current.size())
                throw algebra_error("matrix " + key + " has the wrong number of rows");
            std::size_t ncols = rows[0].size();
            std::vector<long> next;
            for (std::size_t j = 0; j < ncols; ++j) {
                RVector col;
                std::optional<long> coldeg;
                for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
                    Polynomial e = ring->nf(rows[r2][j]);
                    if (!e.is_zero()) {
                        auto h = e.homogeneous_degree();
                        if (!h) throw algebra_error("matrix entries must be homogeneous");
                        long candidate = *h + current[r2];
                        if (coldeg && *coldeg != candidate)
                            throw algebra_error("inhomogeneous column in " + key);
                        coldeg = candidate;
                    }
                    col.push_back(e);
                }
                cols.push_back(std::move(col));
                next.push_back(coldeg.value_or(0));
            }
            diffs.push_back(ModuleMap(ring, current, next, cols));
            twists.push_back(next);
            current = next;
        }
        c.twists = twists;
        c.diffs = diffs;
        bool dsq = true;
        try {
            c.validate();
        } catch (const algebra_error&) {
            dsq = false;
        }
        fact(out, "dsquare_zero", bool_str(dsq));
        if (t.has("expect_dsquare_zero")) exp.check(bool_str(dsq) == t.get("expect_dsquare_zero"));
        if (dsq) {
            std::string ranks;
            for (std::size_t i = 0; i < c.twists.size(); ++i) {
                if (i) ranks += ",";
                ranks += std::to_string(c.twists[i].size());
            }
            fact(out, "ranks", "\"" + ranks + "\"");
            for (std::size_t i = 1; i + 1 < c.twists.size(); ++i) {
                GradedDims h = free_complex_homology(c, i, ctx.cutoff);
                fact(out, "h" + std::to_string(i) + "_dim", std::to_string(h.total));
                if (t.has("expect_h" + std::to_string(i) + "_dim"))
                    exp.check(std::to_string(h.total) ==
                              t.get("expect_h" + std::to_string(i) + "_dim"));
            }
            if (t.has("expect_h0_matches_omega")) {
                // H_0 of the complex must have the graded dimensions of Omega
                PresentedModule h0(ring, c.twists[0],
                                   [&] {
                                       std::vector<RVector> cols;
                                       for (std::size_t j = 0; j < c.diffs[0].src_rank(); ++j)
                                           cols.push_back(c.diffs[0].column(j));
                                       return cols;
                                   }());
                Realization rh(h0);
                Realization ro(omega_presentation(ring));
                long hi = ctx.cutoff;
                if (ring->is_artinian()) {
                    long top = 0;
                    for (long w : c.twists[0]) top = std::max(top, w);
                    hi = top + ring->top_degree();
                }
                bool match = true;
                for (long d = std::min(rh.min_degree(), ro.min_degree()); d <= hi; ++d)
                    if (rh.dim_at(d) != ro.dim_at(d)) match = false;
                fact(out, "h0_matches_omega", bool_str(match));
                exp.check(bool_str(match) == t.get("expect_h0_matches_omega"));
            }
        }
    } else if (t.kind == "normal_form") {
        Polynomial nf = ring->nf(ctx.parse(t.get("element")));
        fact(out, "result", nf.to_string());
        if (t.has("expect")) exp.check(nf == ring->nf(ctx.parse(t.get("expect"))));
    } else if (t.kind == "annihilator") {
        std::vector<Polynomial> elems = ctx.parse_list(t.get("of"));
        std::vector<Polynomial> ann = annihilator(ring, elems);
        fact(out, "generators", poly_list_str(ann));
        for (const auto& g : ann)
            for (const auto& e : elems)
                if (!ring->nf(g * e).is_zero())
                    throw algebra_error("internal: annihilator output fails its defining property");
        if (t.has("expect_generators"))
            exp.check(same_r_ideal(ring, ann, ctx.parse_list(t.get("expect_generators"))));
    } else if (t.kind == "resolution") {
        PresentedModule m = ctx.module_for(t);
        int len = std::stoi(t.get("length"));
        if (len < 0 || len > 64) throw algebra_error("resolution length must be between 0 and 64");
        FreeResolution res(m, ctx.cutoff);
        res.extend_to(static_cast<std::size_t>(len));
        std::string ranks;
        for (int i = 0; i <= len; ++i) {
            if (i) ranks += ",";
            ranks += std::to_string(res.rank(static_cast<std::size_t>(i)));
        }
        fact(out, "ranks", "\"" + ranks + "\"");
        fact(out, "complete", bool_str(res.complete()));
        if (t.has("expect_ranks")) exp.check(ranks == unquote(t.get("expect_ranks")));
    } else {
        throw algebra_error("unknown task kind '" + t.kind + "'");
    }

    out.status = exp.status();
}

}  // namespace

bool is_known_task_kind(const std::string& kind) {
    static const char* const kinds[] = {
        "derivation_well_defined", "apply_derivation", "maximally_differential",
        "differential_ideal",      "socle",            "gorenstein",
        "embdim",                  "krull_dim",        "length",
        "depth",                   "mu",               "complete_intersection",
        "ci_presentation",         "omega",            "der",
        "ext",                     "tor",              "totally_reflexive",
        "gdim",                    "frobenius",        "complex_check",
        "normal_form",             "annihilator",      "resolution"};
    for (const char* k : kinds)
        if (kind == k) return true;
    return false;
}

bool Report::all_pass() const {
    for (const auto& t : tasks)
        if (t.status == "FAIL") return false;
    return true;
}

std::string Report::machine_text() const {
    std::ostringstream out;
    out << "scenario = " << scenario_name << "\n";
    for (const auto& t : tasks) {
        std::string prefix = "task." + std::to_string(t.number) + ".";
        out << prefix << "kind = " << t.kind << "\n";
        for (const auto& [k, v] : t.facts) out << prefix << k << " = " << v << "\n";
        out << prefix << "status = " << t.status << "\n";
    }
    out << "scenario.status = " << (all_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string Report::human_text() const {
    std::ostringstream out;
    out << "== scenario " << scenario_name << " ==\n";
    for (const auto& t : tasks) {
        out << "  [" << t.status << "] task " << t.number << " (" << t.kind << ")";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f", t.millis);
        out << "  [" << buf << " ms]\n";
        for (const auto& [k, v] : t.facts) out << "      " << k << " = " << v << "\n";
        if (!t.message.empty()) out << "      ! " << t.message << "\n";
    }
    out << (all_pass() ? "PASS" : "FAIL") << ": " << scenario_name << "\n";
    return out.str();
}

Report run_scenario(const Scenario& s, const RunOptions& options) {
    Report report;
    report.scenario_name = s.name;
    RunContext ctx(s, options);
    for (const auto& t : s.tasks) {
        TaskOutcome out;
        out.number = t.number;
        out.kind = t.kind;
        auto start = std::chrono::steady_clock::now();
        try {
            run_task(ctx, t, out);
        } catch (const algebra_error& e) {
            out.status = "FAIL";
            out.message = e.what();
            fact(out, "error", std::string("\"") + e.what() + "\"");
        }
        out.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        report.tasks.push_back(std::move(out));
    }
    return report;
}

}  // namespace diffalg
