// Copyright 2026 The fsigtool authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fsig/run.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fsig/covers.hpp"
#include "fsig/problem.hpp"
#include "fsig/selftest.hpp"

namespace fsig {

namespace {

Json value_row(int e, long long q, const std::string& name, unsigned long long length,
               const Rational& value) {
    return Json{{"e", e},
                {"q", q},
                {"name", name},
                {"length", length},
                {"value", frac_json(value)},
                {"decimal", value.decimal_string()}};
}

Json rational_row(int e, long long q, const std::string& name, const Rational& value) {
    return Json{{"e", e},
                {"q", q},
                {"name", name},
                {"value", frac_json(value)},
                {"decimal", value.decimal_string()}};
}

void add_check(Json& doc, const std::string& name, bool pass, const std::string& detail = "") {
    Json row{{"name", name}, {"pass", pass}};
    if (!detail.empty()) row["detail"] = detail;
    doc["checks"].push_back(row);
    if (!pass) doc["status"] = "check_failed";
}

Json divisor_echo(const QDivisor& d) {
    Json arr = Json::array();
    for (const auto& comp : d.components)
        arr.push_back(Json{{"poly", comp.g.to_string()},
                           {"num", std::to_string(comp.coeff.num())},
                           {"den", std::to_string(comp.coeff.den())}});
    return arr;
}

struct TaskContext {
    ProblemFile pf;
    Workspace ws;
    std::string command;
    long long emax = 2;
    std::optional<long long> level_e;
    std::optional<long long> level_r;
    std::vector<Rational> grid;
};

const QDivisor& need_divisor_d(const TaskContext& ctx) {
    if (!ctx.ws.divisor_d) fail(Errc::input, "this command needs a divisor D in [pair]");
    return *ctx.ws.divisor_d;
}

const BasePresentation& need_base(const TaskContext& ctx, const std::optional<std::string>& name,
                                  const char* what) {
    if (!name) fail(Errc::input, std::string("this command needs '") + what + "' in [task]");
    auto it = ctx.ws.bases.find(*name);
    if (it == ctx.ws.bases.end()) fail(Errc::input, "unknown base presentation '" + *name + "'");
    return it->second;
}

// --- command handlers -------------------------------------------------------

void handle_fsig(const TaskContext& ctx, Json& doc) {
    std::vector<Rational> values;
    for (int e = 1; e <= ctx.emax; ++e) {
        SplittingRecord rec = splitting_length(ctx.ws.pair, e);
        values.push_back(rec.s_e);
        doc["records"].push_back(value_row(e, rec.q, "s_e", rec.length, rec.s_e));
    }
    if (values.size() >= 2) {
        Rational ext = extrapolate_last_two(values, ctx.ws.pres.ambient->p());
        doc["extrapolation"] =
            Json{{"name", "s"}, {"value", frac_json(ext)}, {"decimal", ext.decimal_string()}};
    }
}

void handle_curve(const TaskContext& ctx, Json& doc) {
    int e = (int)ctx.level_e.value_or(ctx.emax);
    SignatureCurve curve = signature_curve(ctx.ws.pair, need_divisor_d(ctx), e, ctx.grid);
    for (const auto& s : curve.samples) {
        doc["curve"].push_back(Json{{"e", curve.e},
                                    {"q", curve.q},
                                    {"t", frac_json(s.t)},
                                    {"length", s.length},
                                    {"value", frac_json(s.value)},
                                    {"decimal", s.value.decimal_string()}});
    }
    add_check(doc, "curve is non-increasing", true);
}

void handle_diff(const TaskContext& ctx, Json& doc) {
    int e = (int)ctx.level_e.value_or(1);
    const BasePresentation& base = need_base(ctx, ctx.pf.base, "base");
    DifferentResult diff = different_hypersurface(ctx.ws.pair, need_divisor_d(ctx), e, base);
    doc["different"] = Json{{"e", diff.e},
                            {"q", diff.q},
                            {"h", diff.h.to_string()},
                            {"residual", diff.residual.to_string()}};
    for (const auto& [var, coeff] : diff.coefficients)
        doc["coefficients"].push_back(
            Json{{"name", var}, {"value", frac_json(coeff)}, {"decimal", coeff.decimal_string()}});
    add_check(doc, "reconstruction identity", diff.reconstruction_ok);
    add_check(doc, "residual is a unit", diff.residual_is_unit, diff.residual.to_string());
    add_check(doc, "coefficients within [0,1]", diff.coefficients_in_unit_range);
}

void handle_hk(const TaskContext& ctx, Json& doc) {
    Ideal I = ctx.pf.ideal.empty() ? Ideal::maximal(ctx.ws.pres.ambient)
                                   : [&] {
                                         std::vector<Polynomial> gens;
                                         for (const auto& src : ctx.pf.ideal)
                                             gens.push_back(
                                                 parse_polynomial(src, ctx.ws.pres.ambient));
                                         return Ideal(ctx.ws.pres.ambient, gens);
                                     }();
    std::vector<Rational> values;
    for (int e = 1; e <= ctx.emax; ++e) {
        LevelValue rec = hilbert_kunz_level(ctx.ws.pres, I, e);
        values.push_back(rec.value);
        doc["records"].push_back(value_row(e, rec.q, "e_hk", rec.length, rec.value));
    }
    if (values.size() >= 2) {
        Rational ext = extrapolate_last_two(values, ctx.ws.pres.ambient->p());
        doc["extrapolation"] =
            Json{{"name", "e_hk"}, {"value", frac_json(ext)}, {"decimal", ext.decimal_string()}};
    }
}

void handle_fpt(const TaskContext& ctx, Json& doc) {
    if (!ctx.pf.g) fail(Errc::input, "fpt needs 'g' in [task]");
    Polynomial g = parse_polynomial(*ctx.pf.g, ctx.ws.pres.ambient);
    for (int e = 1; e <= ctx.emax; ++e) {
        FptRecord rec = fpt_level(ctx.ws.pres, g, e);
        Json row = rational_row(rec.e, rec.q, "nu_over_q", rec.ratio);
        row["length"] = rec.nu;  // the splitting exponent nu itself
        doc["records"].push_back(row);
    }
}

void handle_ratio(const TaskContext& ctx, Json& doc) {
    if (!ctx.pf.sdim) fail(Errc::input, "ratio needs 'sdim' in [task]");
    for (int e = 1; e <= ctx.emax; ++e) {
        std::vector<LevelValue> recs = splitting_ratio_estimate(ctx.ws.pair, (int)*ctx.pf.sdim, e);
        const LevelValue& rec = recs.back();
        doc["records"].push_back(value_row(rec.e, rec.q, "ratio", rec.length, rec.value));
    }
}

void handle_adjoint(const TaskContext& ctx, Json& doc) {
    const BasePresentation& base = need_base(ctx, ctx.pf.base, "base");
    AdjunctionReport rep = adjunction_check(ctx.ws.pair, need_divisor_d(ctx), base, (int)ctx.emax);

    doc["different"] = Json{{"e", rep.different.e},
                            {"q", rep.different.q},
                            {"h", rep.different.h.to_string()},
                            {"residual", rep.different.residual.to_string()}};
    for (const auto& [var, coeff] : rep.different.coefficients)
        doc["coefficients"].push_back(
            Json{{"name", var}, {"value", frac_json(coeff)}, {"decimal", coeff.decimal_string()}});

    for (const auto& lvl : rep.levels) {
        doc["records"].push_back(rational_row(lvl.e, lvl.q, "s_pair", lvl.s_pair));
        if (!lvl.admissible) {
            add_check(doc, "level e=" + std::to_string(lvl.e), true, "skipped: index does not divide q-1");
            continue;
        }
        if (lvl.slope)
            doc["records"].push_back(rational_row(lvl.e, lvl.q, "slope", *lvl.slope));
        if (lvl.rhs_direct)
            doc["records"].push_back(rational_row(lvl.e, lvl.q, "rhs_direct", *lvl.rhs_direct));
        if (lvl.rhs_formula)
            doc["records"].push_back(rational_row(lvl.e, lvl.q, "rhs_formula", *lvl.rhs_formula));
        add_check(doc, "rhs routes agree exactly at e=" + std::to_string(lvl.e), lvl.rhs_agree);
        add_check(doc, "corollary inequality at e=" + std::to_string(lvl.e), lvl.corollary_ok);
        if (lvl.equality_case)
            add_check(doc, "equality/linearity case at e=" + std::to_string(lvl.e), true,
                      "s(R,Delta) matches the divisor value within tolerance");
    }
}

void handle_verify_cover(const TaskContext& ctx, Json& doc) {
    if (!ctx.pf.cover) fail(Errc::input, "verify-cover needs 'cover' in [task]");
    auto it = ctx.ws.covers.find(*ctx.pf.cover);
    if (it == ctx.ws.covers.end()) fail(Errc::input, "unknown cover '" + *ctx.pf.cover + "'");
    const CoverPresentation& cover = it->second;

    CoverReport rep = verify_cover(cover, ctx.ws.pair, need_divisor_d(ctx), (int)ctx.emax);
    add_check(doc, "inclusion respects relations", rep.inclusion_ok);
    add_check(doc, "cartier witness u^m matches image of x", rep.witness_ok);
    for (const auto& lvl : rep.levels) {
        doc["records"].push_back(rational_row(lvl.e, lvl.q, "s_base", lvl.s_base));
        doc["records"].push_back(rational_row(lvl.e, lvl.q, "s_cover", lvl.s_cover));
        doc["records"].push_back(rational_row(lvl.e, lvl.q, "m_times_s_base", lvl.m_times_base));
        doc["records"].push_back(rational_row(lvl.e, lvl.q, "gap", lvl.gap));
    }

    if (ctx.pf.base && ctx.pf.base_prime) {
        int e = (int)ctx.level_e.value_or(ctx.emax);
        CoverDifferentReport dr = verify_cover_different(
            cover, ctx.ws.pair, need_divisor_d(ctx), need_base(ctx, ctx.pf.base, "base"),
            need_base(ctx, ctx.pf.base_prime, "base_prime"), e);
        long long q = pow_ll(ctx.ws.pres.ambient->p(), e);
        doc["records"].push_back(rational_row(e, q, "m_times_s_different_base", dr.lhs));
        doc["records"].push_back(rational_row(e, q, "s_different_cover", dr.rhs));
        doc["records"].push_back(rational_row(e, q, "different_gap", dr.gap));
        add_check(doc, "different transformation within 1/p^e", dr.ok, dr.gap.to_string());
    }
}

void handle_selftest(Json& doc) {
    SelftestResult res = run_selftest();
    for (const auto& [name, ok] : res.checks) add_check(doc, name, ok);
}

}  // namespace

RunOutcome run_task(const std::string& command, const std::string& problem_text,
                    const RunOptions& opts) {
    RunOutcome out;
    Json doc;
    doc["tool"] = "fsigtool";
    doc["status"] = "ok";

    const auto t0 = std::chrono::steady_clock::now();

    if (opts.budget) Budget::global().reduction_steps = *opts.budget;
#ifdef _OPENMP
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
#endif
    set_working_order(opts.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex());

    try {
        if (opts.order != "lex" && opts.order != "grevlex")
            fail(Errc::input, "unknown order '" + opts.order + "'");

        TaskContext ctx;
        if (command == "selftest" || (command.empty() && problem_text.empty())) {
            doc["command"] = "selftest";
            handle_selftest(doc);
        } else {
            ctx.pf = parse_problem(problem_text);
            ctx.command = command.empty() ? ctx.pf.command : command;
            if (opts.rounding) {
                if (*opts.rounding != "qm1" && *opts.rounding != "q")
                    fail(Errc::input, "rounding must be 'qm1' or 'q'");
                ctx.pf.rounding = *opts.rounding;
            }
            ctx.ws = build_workspace(ctx.pf);
            ctx.emax = opts.emax ? *opts.emax : ctx.pf.emax.value_or(2);
            if (ctx.emax < 1 || ctx.emax > 6) fail(Errc::input, "emax out of range [1,6]");
            ctx.level_e = opts.e ? opts.e : ctx.pf.e;
            ctx.level_r = opts.r ? opts.r : ctx.pf.r;
            const std::vector<std::string>& grid_src =
                !opts.grid.empty() ? opts.grid
                                   : (!ctx.pf.grid.empty()
                                          ? ctx.pf.grid
                                          : std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"});
            for (const auto& g : grid_src) ctx.grid.push_back(parse_rational_text(g));

            doc["command"] = ctx.command;
            doc["input"] = Json{{"p", ctx.pf.p},
                                {"vars", ctx.pf.vars},
                                {"quotient", ctx.ws.pres.hypersurface
                                                 ? ctx.ws.pres.hypersurface->to_string()
                                                 : ""},
                                {"dimension", ctx.ws.pres.dimension},
                                {"delta", divisor_echo(ctx.ws.pair.delta)},
                                {"D", ctx.ws.divisor_d ? divisor_echo(*ctx.ws.divisor_d)
                                                       : Json::array()},
                                {"rounding", ctx.pf.rounding},
                                {"order", opts.order},
                                {"emax", ctx.emax}};

            if (ctx.command == "fsig")
                handle_fsig(ctx, doc);
            else if (ctx.command == "curve")
                handle_curve(ctx, doc);
            else if (ctx.command == "diff")
                handle_diff(ctx, doc);
            else if (ctx.command == "hk")
                handle_hk(ctx, doc);
            else if (ctx.command == "fpt")
                handle_fpt(ctx, doc);
            else if (ctx.command == "ratio")
                handle_ratio(ctx, doc);
            else if (ctx.command == "adjoint-check")
                handle_adjoint(ctx, doc);
            else if (ctx.command == "verify-cover")
                handle_verify_cover(ctx, doc);
            else if (ctx.command == "selftest")
                handle_selftest(doc);
            else
                fail(Errc::input, "unknown command '" + ctx.command + "'");
        }
    } catch (const Error& err) {
        if (err.code() == Errc::check) {
            doc["status"] = "check_failed";
            doc["error"] = err.what();
        } else {
            doc["status"] = "error";
            doc["error"] = err.what();
            if (doc.contains("records") || doc.contains("curve")) doc["partial"] = true;
        }
        out.diagnostics = std::string(err.what()) + "\n";
    }

    const auto t1 = std::chrono::steady_clock::now();
    doc["timing"] = Json{
        {"wall_ms",
         std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};

    const std::string status = doc["status"].get<std::string>();
    out.exit_code = status == "ok" ? 0 : (status == "check_failed" ? 2 : 1);
    try {
        out.output = emit_document(doc, opts.format);
    } catch (const Error& err) {
        out.exit_code = 1;
        out.diagnostics += std::string(err.what()) + "\n";
    }
    return out;
}

}  // namespace fsig
