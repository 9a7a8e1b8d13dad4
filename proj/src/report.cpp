#include "ks/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>

namespace ks {

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) { return z.get_str(); }

json to_json(const QuadExt& x) {
    return {{"rational", to_string(x.a)}, {"sqrt2", to_string(x.b)}, {"text", to_string(x)}};
}

json to_json(const GaussQuad& x) { return {{"re", to_json(x.re)}, {"im", to_json(x.im)}, {"text", to_string(x)}}; }

json to_json(const QuatQ& q) {
    return {{"coeffs", {to_string(q.w), to_string(q.x), to_string(q.y), to_string(q.z)}}, {"text", to_string(q)}};
}

json to_json(const QuatR& q) {
    return {{"coeffs", {to_json(q.w), to_json(q.x), to_json(q.y), to_json(q.z)}}, {"text", to_string(q)}};
}

json to_json(const CElemQ& x) {
    json terms = json::object();
    for (const auto& [m, v] : x.c) terms[x.alg->mask_name(m)] = to_string(v);
    return {{"text", to_string(x)}, {"terms", terms}};
}

QuadExt quad_from_json(const json& j) {
    if (j.is_string()) return parse_quad(j.get<std::string>());
    if (j.is_number_integer()) return QuadExt(Rational(j.get<long>()));
    if (j.is_object() && j.contains("rational"))
        return QuadExt(parse_rational(j.at("rational").get<std::string>()),
                       parse_rational(j.value("sqrt2", std::string("0"))));
    throw ParseError("expected a Q(sqrt2) value, got " + j.dump());
}

PeriodPoint point_from_json(const json& j) {
    if (j.is_string()) return parse_point(j.get<std::string>());
    if (!j.is_object() || !j.contains("e1") || !j.contains("e2")) throw ParseError("period point needs e1 and e2");
    PeriodPoint p;
    for (const auto& v : j.at("e1")) p.e1.push_back(quad_from_json(v));
    for (const auto& v : j.at("e2")) p.e2.push_back(quad_from_json(v));
    return p;
}

json point_to_json(const PeriodPoint& p) {
    json e1 = json::array(), e2 = json::array();
    for (const auto& x : p.e1) e1.push_back(to_string(x));
    for (const auto& x : p.e2) e2.push_back(to_string(x));
    return {{"e1", e1}, {"e2", e2}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

bool is_T(const std::vector<std::string>& summands) {
    return summands == std::vector<std::string>{"U", "U(2)", "D4minus"};
}

std::vector<std::string> t_names() { return {"f1", "f2", "f3", "f4", "h1", "h2", "h3", "h4"}; }

bool verbose() {
    const char* v = std::getenv("KS_VERBOSE");
    return v && *v && std::string(v) != "0";
}

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto r = f();
        if (verbose())
            std::cerr << "[ks] " << name << " "
                      << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                             .count()
                      << " ms\n";
        return r;
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

GradedRep rep_for(const std::string& name, AlgPtr alg) {
    IntLattice l = named_lattice(name);
    if (l.name == "D4minus") return rep_D4minus(std::move(alg));
    if (l.rank() == 2 && sgn(l.gram(0, 0)) == 0 && sgn(l.gram(1, 1)) == 0 && is_integral(l.gram(0, 1)))
        return rep_U(std::move(alg), l.gram(0, 1).get_num().get_si());
    throw std::invalid_argument("no built-in representation for " + name);
}

QuatMatT reference_T() {
    QuatMatT T(4, 4);
    T(0, 1) = QuatQ(256), T(1, 0) = QuatQ(-256), T(2, 3) = QuatQ(-512), T(3, 2) = QuatQ(512);
    return T;
}

std::string summand_list(const std::vector<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : "+") + x;
    return out;
}

}  // namespace

PeriodPoint parse_point(const std::string& s) {
    if (trim(s) == "reference") return reference_omega();
    auto halves = split(s, ';');
    if (halves.size() != 2) throw ParseError("period point must be 'e1 entries;e2 entries'");
    PeriodPoint p;
    for (const auto& t : split(halves[0], ',')) p.e1.push_back(parse_quad(trim(t)));
    for (const auto& t : split(halves[1], ',')) p.e2.push_back(parse_quad(trim(t)));
    return p;
}

std::vector<std::string> split_summands(const std::string& s) {
    std::vector<std::string> out;
    for (const auto& t : split(s, '+')) {
        std::string x = trim(t);
        if (x.empty()) throw ParseError("empty lattice summand in '" + s + "'");
        out.push_back(named_lattice(x).name);
    }
    return out;
}

json clifford_info(const std::vector<std::string>& summands, CheckList& checks) {
    std::vector<IntLattice> parts;
    for (const auto& s : summands) parts.push_back(named_lattice(s));
    IntLattice l = orthogonal_sum(parts);
    AlgPtr a = make_algebra(l, is_T(summands) ? t_names() : std::vector<std::string>{});
    size_t n = a->n();
    size_t ev = a->even_monomials().size(), od = a->odd_monomials().size();
    std::string tag = summand_list(summands);
    checks.add("dimension_law[" + tag + "]", a->dim() == (Mask(1) << n) && ev == (size_t(1) << (n ? n - 1 : 0)) &&
                                                  ev + od == a->dim());
    json names = a->names();
    return {{"lattice", tag}, {"gram", to_json(l.gram)}, {"generators", names}, {"rank", n},
            {"dim", a->dim()}, {"even_dim", ev}, {"odd_dim", od}};
}

json glue_report(const std::string& left, const std::string& right, CheckList& checks) {
    IntLattice la = named_lattice(left), lb = named_lattice(right);
    AlgPtr A = make_algebra(la), B = make_algebra(lb);
    Glued g = glue(*A, *B);
    bool anti = true;
    for (size_t i = 0; i < A->n(); ++i)
        for (size_t j = 0; j < B->n(); ++j) {
            CElemQ u = CElemQ::gen(g.alg, i), v = CElemQ::gen(g.alg, g.shift + j);
            if (!(u * v + v * u).is_zero()) anti = false;
        }
    std::string tag = la.name + "+" + lb.name;
    checks.add("glue_anticommute[" + tag + "]", anti);
    checks.add("glue_dimension[" + tag + "]", g.alg->dim() == A->dim() * B->dim());
    json out{{"left", la.name}, {"right", lb.name}, {"gram", to_json(g.alg->bilinear())}, {"dim", g.alg->dim()}};
    GradedRep ra = rep_for(left, A), rb = rep_for(right, B);
    GradedRep rg = graded_kronecker(ra, rb);
    checks.add("glue_rep_relations[" + tag + "]", true);  // graded_kronecker throws on failure
    json gens = json::array();
    for (const auto& m : rg.gens) gens.push_back(to_json(m));
    out["rep"] = {{"dim", rg.dim}, {"grading", rg.grading}, {"generator_images", gens}};
    return out;
}

json rep_report(const KSData& ks, const std::string& element) {
    CElemQ x = to_rational_elem(parse_element(ks.setup.clT, element));
    json out{{"element", to_json(x)}, {"phi", to_json(ks.setup.repT.eval(x))}};
    if (x.is_even()) {
        auto [p, m] = split_eval(ks.setup.repT, ks.setup.split, x);
        out["split"] = {{"plus", to_json(p)}, {"minus", to_json(m)}};
    }
    return out;
}

json decompose_report(const KSData& ks, size_t li, CheckList& checks) {
    const TSetup& t = ks.setup;
    json out;
    std::vector<size_t> plus1, minus1;
    for (auto r : t.split.plus_rows) plus1.push_back(r + 1);
    for (auto r : t.split.minus_rows) minus1.push_back(r + 1);
    out["split"] = {{"plus_rows", plus1}, {"minus_rows", minus1}};

    json xs = json::array();
    bool xok = true;
    CElemQ sum(t.clUU2);
    for (size_t i = 0; i < 4; ++i) {
        xs.push_back(to_json(ks.x[i].elem));
        xok = xok && is_pseudo_idempotent(ks.x[i]);
        sum += ks.x[i].elem;
        for (size_t j = 0; j < 4; ++j)
            if (i != j && !(ks.x[i].elem * ks.x[j].elem).is_zero()) xok = false;
    }
    checks.add("x_pseudo_idempotents", xok && sum == Rational(8) * CElemQ::one(t.clUU2));
    out["x"] = xs;
    out["H"] = to_json(ks.H);
    out["y"] = {to_json(ks.y[0].elem), to_json(ks.y[1].elem)};
    QuatMat d40(2, 2), d04(2, 2);
    d40(0, 0) = QuatQ(4), d04(1, 1) = QuatQ(4);
    checks.add("y_pseudo_idempotents", is_pseudo_idempotent(ks.y[0]) && is_pseudo_idempotent(ks.y[1]) &&
                                           (ks.y[0].elem * ks.y[1].elem).is_zero() &&
                                           t.repD4.eval(ks.y[0].elem) == d40 && t.repD4.eval(ks.y[1].elem) == d04);

    json eps = json::array();
    bool eok = true, images = true;
    CElemQ esum(t.clT);
    for (size_t i = 0; i < 8; ++i) {
        eps.push_back(to_json(ks.eps[i].elem));
        eok = eok && is_pseudo_idempotent(ks.eps[i]) && ks.eps[i].scale == 32;
        esum += ks.eps[i].elem;
        for (size_t j = 0; j < 8; ++j)
            if (i != j && !(ks.eps[i].elem * ks.eps[j].elem).is_zero()) eok = false;
        auto [p, m] = split_eval(t.repT, t.split, ks.eps[i].elem);
        QuatMat ep(4, 4), em(4, 4);
        (i < 4 ? ep : em)(i % 4, i % 4) = QuatQ(32);
        if (p != ep || m != em) images = false;
    }
    checks.add("epsilon_pseudo_idempotents", eok && esum == Rational(32) * CElemQ::one(t.clT));
    checks.add("epsilon_split_images", images);
    out["epsilons"] = eps;

    json kers = json::array();
    bool kok = true;
    for (size_t i = 0; i < 4; ++i) {
        kers.push_back({{"of", "x" + std::to_string(i + 1)}, {"even", ks.xker[i].even.size()}, {"odd", ks.xker[i].odd.size()}});
        kok = kok && ks.xker[i].even.size() == 2 && ks.xker[i].odd.size() == 2;
    }
    for (size_t i = 0; i < 2; ++i) {
        kers.push_back({{"of", "y" + std::to_string(i + 1)}, {"even", ks.yker[i].even.size()}, {"odd", ks.yker[i].odd.size()}});
        kok = kok && ks.yker[i].even.size() == 4 && ks.yker[i].odd.size() == 4;
    }
    checks.add("kernel_ranks", kok);
    out["kernels"] = kers;

    json lams = json::array();
    bool lok = true;
    std::vector<std::vector<Rational>> stacked;
    for (size_t i = 0; i < 8; ++i) {
        LambdaRe lam = build_lambda(ks, i);
        bool even = true;
        for (const auto& b : lam.basis) {
            even = even && b.is_even();
            stacked.push_back(b.coords());
        }
        bool ok = lam.basis.size() == 16 && lam.coord.dim() == 16 && lam.saturated && even;
        lok = lok && ok;
        lams.push_back({{"index", i + 1}, {"generators", lam.basis.size()}, {"rank", lam.coord.dim()},
                        {"saturated", lam.saturated}, {"even", even}});
    }
    checks.add("lambda_rank16", lok);
    checks.add("lambda_direct_sum", rank(QMat::from_rows(stacked)) == 128);
    out["lambdas"] = lams;

    LambdaRe lam = build_lambda(ks, li);
    RepPhiRe phi = build_phi_re(ks, lam);
    bool eps_unit = true;
    for (const auto& b : lam.basis)
        if (b * ks.eps[li].elem != Rational(32) * b) eps_unit = false;
    json basis = json::array();
    for (const auto& b : lam.basis) basis.push_back(to_json(b));
    json N = json::array();
    bool bd = true;
    for (const auto& m : phi.N) {
        N.push_back(to_json(m));
        bd = bd && is_block_diagonal(m, 4);
    }
    checks.add("epsilon_right_unit", eps_unit);
    checks.add("N1_identity", phi.N[0] == IMat::identity(16));
    checks.add("N_block_diagonal", bd);
    checks.add("N_primitive_rank4", spans_primitive_rank4(phi));
    checks.add("N_commute_left_action", commutes_with_left_action(ks, lam, phi));
    json ht = json::array();
    for (const auto& h : phi.htilde) ht.push_back(to_json(h));
    out["lambda"] = {{"index", li + 1}, {"basis", basis}, {"htilde", ht}, {"N", N}};
    return out;
}

json attributes_report(const AttributeReport& a, CheckList& checks) {
    json mods = json::array();
    std::vector<QuatQ> ring(a.ext.r.begin(), a.ext.r.end());
    bool closed = true, classified = true;
    for (size_t b = 0; b < 4; ++b) {
        const auto& m = a.ext.mods[b];
        json basis = json::array(), mins = json::array();
        for (const auto& q : m.basis) basis.push_back(to_json(q));
        for (const auto& q : a.minima[b].vectors) mins.push_back(to_json(q));
        json divs = json::array();
        for (const auto& d : a.ext.divisors[b]) divs.push_back(to_json(d));
        closed = closed && left_closed(m, ring);
        classified = classified && !a.match[b].empty();
        mods.push_back({{"block", b + 1},
                        {"elementary_divisors", divs},
                        {"d", to_json(a.ext.d[b])},
                        {"basis", basis},
                        {"gram", to_json(m.gram)},
                        {"min_norm", to_json(a.minima[b].norm)},
                        {"min_pairs", a.minima[b].vectors.size()},
                        {"minimal_vectors", mins},
                        {"match", a.match[b]},
                        {"multiplier", to_json(a.multipliers[b])}});
    }
    json r = json::array();
    for (const auto& q : a.ext.r) r.push_back(to_json(q));
    checks.add("modules_left_R_closed", closed);
    checks.add("modules_classified", classified);
    checks.add("ME_antisymmetric", a.ME.transpose() == -a.ME);
    checks.add("T_reproduces_ME", a.T_verified);
    checks.add("T_skew_hermitian", is_skew_hermitian(a.T));
    return {{"r", r},
            {"modules", mods},
            {"alpha", to_json(a.alpha)},
            {"trace_domain", to_string(a.domain)},
            {"ME", to_json(a.ME)},
            {"T", to_json(a.T)},
            {"T_canonical", to_json(a.T_canonical)}};
}

json period_report(const PeriodContext& ctx, const PeriodPoint& p, Frame frame, bool auto_sign, CheckList& checks) {
    PeriodResult r = period_matrix(ctx, p, frame, 0, auto_sign);
    json xs = json::array();
    for (const auto& x : r.x) {
        json v = json::array();
        for (const auto& c : x) v.push_back(to_json(c));
        xs.push_back(v);
    }
    json out{{"point", point_to_json(p)},
             {"frame", to_string(frame)},
             {"auto_sign", auto_sign},
             {"j_sign", r.j_sign},
             {"E_v_Jv_positive", {{"plus", r.plus_positive}, {"minus", r.minus_positive}}},
             {"eigenspace_dim", r.eig_dim},
             {"intertwiner_kernel_dim", r.q_kernel_dim},
             {"fallback_used", r.fallback_used},
             {"x", xs},
             {"Z", to_json(r.Z)},
             {"antisymmetric", r.antisymmetric},
             {"positive", r.positive},
             {"sparse", r.sparse}};
    if (r.sparse) {
        out["a"] = to_json(*r.a);
        out["b"] = to_json(*r.b);
        if (*r.a != GaussQuad(1)) out["f_a"] = to_json(cayley(*r.a));
        if (*r.b != GaussQuad(1)) out["f_b"] = to_json(cayley(*r.b));
    }
    checks.add("J_squared_minus_one", r.j_squared);
    checks.add("J_spin", r.j_spin);
    checks.add("J_commutes_with_N", r.j_commutes);
    checks.add("J_isometry_of_E", r.j_isometry);
    checks.add("J_sign_unique", r.plus_positive != r.minus_positive);
    checks.add("eigenspace_dim_8", r.eig_dim == 8);
    checks.add("Q_conjugation", r.q_verified);
    checks.add("Z_antisymmetric", r.antisymmetric);
    checks.add("Z_positive", r.positive);
    return out;
}

json scan_report(const PeriodContext& ctx, const std::vector<PeriodPoint>& pts, Frame frame, CheckList& checks) {
    json out = json::array();
    auto entries = rank18_scan(ctx, pts, frame);
    for (size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        json j{{"point", point_to_json(e.point)}, {"sparse", e.result.sparse}, {"antisymmetric", e.result.antisymmetric},
               {"positive", e.result.positive}, {"a_in_disc", e.a_in_disc}, {"b_in_disc", e.b_in_disc},
               {"pass", e.pass()}};
        if (e.result.sparse) j["a"] = to_json(*e.result.a), j["b"] = to_json(*e.result.b);
        if (e.fa) j["f_a"] = to_json(*e.fa);
        if (e.fb) j["f_b"] = to_json(*e.fb);
        out.push_back(j);
        checks.add("scan_point_" + std::to_string(k + 1), e.pass());
    }
    return out;
}

json rank_check_report(const KSData& ks, CheckList& checks) {
    RankCheck rc = rank_check_Tprime(ks);
    std::vector<size_t> ev(rc.even.begin(), rc.even.end()), od(rc.odd.begin(), rc.odd.end());
    bool all2 = true;
    for (size_t i = 0; i < 4; ++i) all2 = all2 && rc.even[i] == 2 && rc.odd[i] == 2;
    checks.add("rank_pieces_complex_dim_1", all2);
    checks.add("even_pieces_independent", rc.even_total == 8);
    return {{"even", ev}, {"odd", od}, {"even_stacked_rank", rc.even_total}};
}

json normalize_job(const json& in) {
    if (!in.is_object()) throw ParseError("job must be a JSON object");
    static const std::vector<std::string> known{"clifford-info", "glue", "rep", "decompose", "attributes",
                                                "period", "rank18-scan", "rank-check"};
    json j;
    std::vector<std::string> lattice;
    if (in.contains("lattice")) {
        const json& l = in.at("lattice");
        if (l.is_string())
            lattice = split_summands(l.get<std::string>());
        else
            for (const auto& s : l) lattice.push_back(named_lattice(s.get<std::string>()).name);
    } else {
        lattice = {"U", "U(2)", "D4minus"};
    }
    j["lattice"] = lattice;
    j["alpha"] = in.value("alpha", std::string("(f1+f2)*(f3+f4)"));
    j["trace_domain"] = to_string(parse_trace_domain(in.value("trace_domain", std::string("matrix_rep"))));
    j["frame"] = to_string(parse_frame(in.value("frame", std::string("rational"))));
    j["auto_sign"] = in.value("auto_sign", true);
    j["both_conjugates"] = in.value("both_conjugates", false);
    long li = in.value("lambda", 1L);
    if (li < 1 || li > 8) throw ParseError("lambda must be in 1..8");
    j["lambda"] = li;
    j["omega"] = point_to_json(in.contains("omega") ? point_from_json(in.at("omega")) : reference_omega());
    json pts = json::array();
    if (in.contains("scan_points"))
        for (const auto& p : in.at("scan_points")) pts.push_back(point_to_json(point_from_json(p)));
    else
        for (const auto& p : default_scan_points()) pts.push_back(point_to_json(p));
    j["scan_points"] = pts;
    j["rep_elements"] = in.value("rep_elements", std::vector<std::string>{});
    json glue = in.value("glue", json{{"left", "U"}, {"right", "U(2)"}});
    j["glue"] = {{"left", named_lattice(glue.at("left").get<std::string>()).name},
                 {"right", named_lattice(glue.at("right").get<std::string>()).name}};
    std::vector<std::string> cmds = in.value("commands", known);
    std::vector<std::string> ordered;
    for (const auto& c : cmds)
        if (std::find(known.begin(), known.end(), c) == known.end()) throw ParseError("unknown command '" + c + "'");
    for (const auto& k : known)
        if (std::find(cmds.begin(), cmds.end(), k) != cmds.end()) ordered.push_back(k);
    j["commands"] = ordered;
    return j;
}

json run_job(const json& raw) {
    json job = stage("parse", [&] { return normalize_job(raw); });
    std::vector<std::string> cmds = job["commands"];
    std::vector<std::string> lattice = job["lattice"];
    auto wants = [&](const std::string& c) { return std::find(cmds.begin(), cmds.end(), c) != cmds.end(); };
    CheckList checks;
    json out{{"job", job}};

    if (wants("clifford-info"))
        out["clifford-info"] = stage("clifford-info", [&] {
            json parts = json::array();
            for (const auto& s : lattice) parts.push_back(clifford_info({s}, checks));
            if (lattice.size() > 1) parts.push_back(clifford_info(lattice, checks));
            if (is_T(lattice)) parts.push_back(clifford_info({"U", "U(2)"}, checks));
            return parts;
        });
    if (wants("glue"))
        out["glue"] = stage("glue", [&] {
            return glue_report(job["glue"]["left"].get<std::string>(), job["glue"]["right"].get<std::string>(), checks);
        });

    bool needs_ks = false;
    for (const auto& c : cmds) needs_ks = needs_ks || (c != "clifford-info" && c != "glue");
    if (needs_ks) {
        if (!is_T(lattice))
            throw StageError("decompose", "the decomposition stages are implemented for U+U(2)+D4minus only");
        KSData ks = stage("setup", [] { return build_ks(); });
        size_t li = job["lambda"].get<size_t>() - 1;
        if (wants("rep"))
            out["rep"] = stage("rep", [&] {
                json r = json::array();
                for (const auto& e : job["rep_elements"]) r.push_back(rep_report(ks, e.get<std::string>()));
                return r;
            });
        if (wants("decompose")) out["decompose"] = stage("decompose", [&] { return decompose_report(ks, li, checks); });
        bool needs_attr = wants("attributes") || wants("period") || wants("rank18-scan");
        if (needs_attr) {
            LambdaRe lam = stage("lambda", [&] { return build_lambda(ks, li); });
            RepPhiRe phi = stage("phi", [&] { return build_phi_re(ks, lam); });
            AttributeReport attr = stage("attributes", [&] {
                CElemQ alpha = to_rational_elem(parse_element(ks.setup.clT, job["alpha"].get<std::string>()));
                return compute_attributes(ks, lam, phi, alpha, parse_trace_domain(job["trace_domain"]));
            });
            if (wants("attributes")) out["attributes"] = stage("attributes", [&] { return attributes_report(attr, checks); });
            std::vector<size_t> pairs;
            for (const auto& m : attr.minima) pairs.push_back(m.vectors.size());
            out["reference_comparison"]["min_pairs"] = {{"computed", pairs}, {"expected", {6, 6, 12, 12}}};
            out["reference_comparison"]["T_equal"] = (attr.T == reference_T());
            PeriodContext ctx{ks, lam, phi, attr};
            Frame frame = parse_frame(job["frame"]);
            if (wants("period"))
                out["period"] = stage("period", [&] {
                    PeriodPoint p = point_from_json(job["omega"]);
                    json r{{"omega", period_report(ctx, p, frame, job["auto_sign"], checks)}};
                    if (r["omega"]["sparse"].get<bool>()) {
                        ReferenceTarget tg = reference_target();
                        GaussQuad a(quad_from_json(r["omega"]["a"]["re"]), quad_from_json(r["omega"]["a"]["im"]));
                        GaussQuad b(quad_from_json(r["omega"]["b"]["re"]), quad_from_json(r["omega"]["b"]["im"]));
                        auto [ma, mb] = match_target(a, b, tg);
                        out["reference_comparison"]["period"] = {{"expected_a", to_json(tg.a)},
                                                             {"expected_b", to_json(tg.b)},
                                                             {"a_matches", ma},
                                                             {"b_matches", mb}};
                    }
                    if (job["both_conjugates"].get<bool>()) {
                        CheckList side;
                        r["omega_bar"] = period_report(ctx, conjugate(p), frame, job["auto_sign"], side);
                        r["omega_bar"]["checks"] = side.items;
                    }
                    return r;
                });
            if (wants("rank18-scan"))
                out["rank18-scan"] = stage("rank18-scan", [&] {
                    std::vector<PeriodPoint> pts;
                    for (const auto& p : job["scan_points"]) pts.push_back(point_from_json(p));
                    return scan_report(ctx, pts, frame, checks);
                });
        }
        if (wants("rank-check")) out["rank-check"] = stage("rank-check", [&] { return rank_check_report(ks, checks); });
    }
    out["checks"] = checks.items;
    out["all_checks_pass"] = checks.all;
    return out;
}

}  // namespace ks
