#include "reebcirc/ops.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

namespace reebcirc {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_to_pi(double a) {
  while (a > kPi) a -= 2 * kPi;
  while (a < -kPi) a += 2 * kPi;
  return a;
}

// Deterministic low-discrepancy anchor offsets in (-1, 1).
double jitter_offset(int t) {
  if (t == 0) return 0.0;
  double x = std::fmod(t * 0.7548776662466927, 1.0);
  return (2.0 * x - 1.0) * 0.85;
}

struct EdgeCurve {
  int host = -1;
  int branch = 0;  // +1: above the host center, -1: below (transverse axis)
  double u_lo = 0, u_hi = 0;
};

// The boundary curve of one side of an edge's preimage. Inside an open edge
// the curve lies on a single circle, so host and branch are well defined.
std::optional<EdgeCurve> edge_curve(const SSRegion& r, const PRGraph& g, const PREdge& e,
                                    bool upper) {
  int best_k = -1, best_i = -1;
  double best_w = -1;
  for (auto [k, i] : e.chain) {
    double w = g.criticals[k + 1] - g.criticals[k];
    if (w > best_w) {
      best_w = w;
      best_k = k;
      best_i = i;
    }
  }
  if (best_k < 0) return std::nullopt;
  double u = g.slab_mid[best_k];
  const Interval& iv = g.slab_fibers[best_k][best_i];
  double t = upper ? iv.hi : iv.lo;
  Point p = make_point(g.axis, u, t);
  int host = -1;
  double best_f = 1e9;
  for (int j = 0; j < r.size(); ++j) {
    double f = std::abs(r.constraints()[j].eval(p));
    if (f < best_f) {
      best_f = f;
      host = j;
    }
  }
  if (host < 0 || best_f > 1e-6 * std::max(1.0, r.constraints()[host].circle.radius))
    return std::nullopt;
  const Circle& hc = r.constraints()[host].circle;
  EdgeCurve c;
  c.host = host;
  c.branch = t >= center_transverse(g.axis, hc) ? 1 : -1;
  c.u_lo = e.slab.lo;
  c.u_hi = e.slab.hi;
  return c;
}

std::optional<Point> curve_point(const SSRegion& r, Axis axis, const EdgeCurve& c, double u) {
  const Circle& hc = r.constraints()[c.host].circle;
  double du = u - center_sweep(axis, hc);
  double disc = hc.radius * hc.radius - du * du;
  if (disc <= 0) return std::nullopt;
  double t = center_transverse(axis, hc) + c.branch * std::sqrt(disc);
  return make_point(axis, u, t);
}

// Anchor exclusions: on exactly one circle, clear of every critical abscissa
// of the horizontal graph, interior of a vertical-graph edge and clear of the
// vertical criticals.
bool anchor_admissible(const SSRegion& r, const PRGraph& gh, const PRGraph& gv, const PREdge& e,
                       Point p, int host) {
  const double eps = r.tol().eps_abs;
  for (int j = 0; j < r.size(); ++j) {
    if (j == host) continue;
    if (std::abs(r.constraints()[j].eval(p)) <= 100 * eps) return false;
  }
  double u = sweep_coord(gh.axis, p);
  if (u <= e.slab.lo || u >= e.slab.hi) return false;
  double h_span = gh.criticals.back() - gh.criticals.front();
  for (std::size_t k = 0; k < gh.criticals.size(); ++k)
    if (std::abs(u - gh.criticals[k]) <= std::max(4 * gh.crit_delta[k], 1e-4 * h_span))
      return false;
  double v = sweep_coord(gv.axis, p);
  double v_span = gv.criticals.back() - gv.criticals.front();
  for (std::size_t k = 0; k < gv.criticals.size(); ++k)
    if (std::abs(v - gv.criticals[k]) <= std::max(4 * gv.crit_delta[k], 1e-4 * v_span))
      return false;
  try {
    LocateResult loc = locate(r, gv, p);
    if (loc.is_vertex) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<SingularPoint> all_singulars(const PRGraph& g) {
  std::vector<SingularPoint> out;
  for (const auto& v : g.vertices)
    for (const auto& s : v.singulars) out.push_back(s);
  return out;
}

// New singular points involving the freshly added constraint, sorted by sweep.
std::vector<SingularPoint> new_singulars(const PRGraph& g, int added_index) {
  std::vector<SingularPoint> out;
  for (const auto& s : all_singulars(g))
    if (s.c0 == added_index || s.c1 == added_index) out.push_back(s);
  std::sort(out.begin(), out.end(), [&](const SingularPoint& a, const SingularPoint& b) {
    return sweep_coord(g.axis, a.location) < sweep_coord(g.axis, b.location);
  });
  return out;
}

bool old_singulars_persist(const PRGraph& before, const PRGraph& after, double tol) {
  auto now = all_singulars(after);
  for (const auto& s : all_singulars(before)) {
    bool found = false;
    for (const auto& t : now) found |= t.same_as(s, tol);
    if (!found) return false;
  }
  return true;
}

Interval effective_window(const SSRegion& r, const PREdge& e, const OpOptions& opts) {
  if (opts.window && opts.window->width() < 4 * r.tol().eps_abs)
    throw WindowUnsatisfiable("x-window narrower than 4*eps");
  double margin = std::max(0.02 * e.slab.width(), 100 * r.tol().eps_abs);
  Interval w{e.slab.lo + margin, e.slab.hi - margin};
  if (opts.window) {
    w.lo = std::max(w.lo, opts.window->lo);
    w.hi = std::min(w.hi, opts.window->hi);
  }
  if (w.width() <= 4 * r.tol().eps_abs)
    throw WindowUnsatisfiable("x-window does not overlap the target edge interior");
  return w;
}

}  // namespace

SSRegion unit_disk_region(Tolerance tol) {
  return SSRegion({{Circle{{0, 0}, 1.0}, Side::KeepInside}}, {0, 0}, tol);
}

Circle make_mbcc_circle(const Circle& host, double theta, double radius) {
  return Circle{host.at(theta), radius};
}

Side sscc_side(SsccCase c) { return c == SsccCase::A2 ? Side::KeepInside : Side::KeepOutside; }

Circle make_sscc_circle(const Circle& host, double theta1, double theta2, double sagitta,
                        SsccCase c) {
  Point p1 = host.at(theta1), p2 = host.at(theta2);
  Point mid = 0.5 * (p1 + p2);
  Point arc_pt = host.at(0.5 * (theta1 + theta2));
  Point n = normalized(arc_pt - mid);
  if (norm(arc_pt - mid) < 1e-15) n = normalized(perp(p2 - p1));
  double half = 0.5 * dist(p1, p2);
  double s = sagitta;
  double radius = (half * half + s * s) / (2.0 * s);
  // A-1: minor arc dips past the chord away from the host arc (center on the
  // arc side); A-2 and B: minor arc lies on the host-arc side.
  Point center = (c == SsccCase::A1) ? mid + (radius - s) * n : mid - (radius - s) * n;
  return Circle{center, radius};
}

// ---- MBCC -------------------------------------------------------------------

OpResult mbcc(const SSRegion& r, const PRGraph& gh, const PRGraph& gv, int target_edge,
              const OpOptions& opts) {
  if (target_edge < 0 || target_edge >= static_cast<int>(gh.edges.size()))
    throw Error("mbcc: target edge does not exist");
  const PREdge& e = gh.edges[target_edge];
  const double eps = r.tol().eps_abs;
  Interval window = effective_window(r, e, opts);

  auto singulars_h = all_singulars(gh);
  auto singulars_v = all_singulars(gv);

  std::vector<bool> sides;
  if (opts.upper_half || !opts.prefer_lower_arc)
    sides = {true, false};
  else
    sides = {false, true};

  bool any_candidate = false;
  int iterations_used = 0;
  std::string address = edge_address(gh, target_edge);

  for (bool upper : sides) {
    auto curve = edge_curve(r, gh, e, upper);
    if (!curve) continue;
    if (opts.upper_half && curve->host != 0) continue;

    for (int jt = 0; jt < 16; ++jt) {
      double ua = window.mid() + 0.5 * window.width() * jitter_offset(jt);
      auto pt = curve_point(r, gh.axis, *curve, ua);
      if (!pt) continue;
      Point p = *pt;
      if (opts.upper_half && p.y <= 0) continue;
      if (!anchor_admissible(r, gh, gv, e, p, curve->host)) continue;
      any_candidate = true;

      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& s : singulars_h) nearest = std::min(nearest, dist(p, s.location));
      for (const auto& s : singulars_v) nearest = std::min(nearest, dist(p, s.location));
      const Circle& host = r.constraints()[curve->host].circle;
      double u_p = sweep_coord(gh.axis, p);
      double r0 = 0.25 * std::min(nearest, host.radius);
      r0 = std::min(r0, 0.5 * std::min(u_p - window.lo, window.hi - u_p));
      if (opts.upper_half) r0 = std::min(r0, 0.5 * p.y);
      if (r0 <= 100 * eps) continue;

      double theta = host.angle_of(p);
      for (int it = 0; it < opts.max_iterations; ++it) {
        ++iterations_used;
        double radius = r0 * std::pow(0.5, it);
        if (radius <= 100 * eps) break;
        Circle added = make_mbcc_circle(host, theta, radius);
        SSRegion cand = r.with_constraint({added, Side::KeepOutside});
        if (!cand.validate_fast().ok()) continue;
        PRGraph gh2, gv2;
        try {
          gh2 = compute_pr_graph(cand, gh.axis);
          gv2 = compute_pr_graph(cand, gv.axis);
        } catch (const Error&) {
          continue;
        }
        auto fresh = new_singulars(gh2, r.size());
        if (fresh.size() != 3) continue;
        std::vector<double> vals;
        for (const auto& s : fresh) vals.push_back(sweep_coord(gh.axis, s.location));
        if (vals[1] - vals[0] <= 2 * eps || vals[2] - vals[1] <= 2 * eps) continue;
        if (vals.front() <= window.lo || vals.back() >= window.hi) continue;
        if (opts.upper_half && added.center.y - added.radius <= 0) continue;
        if (!check_corollary1(gh, gh2, target_edge)) continue;
        if (!old_singulars_persist(gh, gh2, 100 * eps)) continue;
        if (!cand.validate().ok()) continue;

        OpRecord rec;
        rec.kind = OpKind::Mbcc;
        rec.host = curve->host;
        rec.target_edge = address;
        rec.theta = theta;
        rec.radius = radius;
        OpReport rep;
        rep.added = added;
        rep.new_values = vals;
        rep.pattern_verified = true;
        rep.search_iterations = iterations_used;
        return {std::move(cand), std::move(rec), std::move(rep)};
      }
    }
  }
  if (!any_candidate)
    throw NoCandidatePoint("mbcc: every anchor candidate on the edge is excluded");
  throw SearchBudgetExceeded("mbcc: radius search exhausted its budget");
}

OpResult mbcc(const SSRegion& r, int target_edge, const OpOptions& opts) {
  PRGraph gh = compute_pr_graph(r, Axis::Horizontal);
  PRGraph gv = compute_pr_graph(r, Axis::Vertical);
  return mbcc(r, gh, gv, target_edge, opts);
}

// ---- SSCC -------------------------------------------------------------------

OpResult sscc(const SSRegion& r, const PRGraph& gh, const PRGraph& gv, int target_edge,
              SsccCase scase, const OpOptions& opts) {
  if (target_edge < 0 || target_edge >= static_cast<int>(gh.edges.size()))
    throw Error("sscc: target edge does not exist");
  const PREdge& e = gh.edges[target_edge];
  const double eps = r.tol().eps_abs;
  Interval window = effective_window(r, e, opts);
  std::string address = edge_address(gh, target_edge);

  std::vector<bool> sides = opts.prefer_lower_arc ? std::vector<bool>{false, true}
                                                  : std::vector<bool>{true, false};
  bool any_candidate = false;
  bool case_possible = false;
  int iterations_used = 0;

  for (bool upper : sides) {
    auto curve = edge_curve(r, gh, e, upper);
    if (!curve) continue;

    for (int jt = 0; jt < 12; ++jt) {
      double ua, half0;
      if (opts.chord_targets) {
        ua = 0.5 * (opts.chord_targets->first + opts.chord_targets->second);
        half0 = 0.5 * (opts.chord_targets->second - opts.chord_targets->first);
        if (jt > 0) break;  // fixed chord: no anchor jitter
      } else {
        ua = window.mid() + 0.5 * window.width() * jitter_offset(jt);
        half0 = 0.125 * std::min(ua - window.lo, window.hi - ua);
      }
      if (half0 <= 4 * eps) continue;

      for (int it = 0; it < opts.max_iterations; ++it) {
        ++iterations_used;
        double half = half0 * std::pow(0.5, it);
        if (half <= 4 * eps) break;
        double u1 = ua - half, u2 = ua + half;
        auto pt1 = curve_point(r, gh.axis, *curve, u1);
        auto pt2 = curve_point(r, gh.axis, *curve, u2);
        auto ptm = curve_point(r, gh.axis, *curve, ua);
        if (!pt1 || !pt2 || !ptm) continue;
        if (!anchor_admissible(r, gh, gv, e, *pt1, curve->host) ||
            !anchor_admissible(r, gh, gv, e, *pt2, curve->host))
          continue;
        // both points must also map into the interior of one edge of the
        // vertical graph
        try {
          LocateResult l1 = locate(r, gv, *pt1);
          LocateResult l2 = locate(r, gv, *pt2);
          if (l1.is_vertex || l2.is_vertex || l1.id != l2.id) continue;
        } catch (const Error&) {
          continue;
        }
        any_candidate = true;

        Point mid = 0.5 * (*pt1 + *pt2);
        PointClass mc = r.classify(mid);
        if (mc == PointClass::Boundary) continue;
        if ((scase == SsccCase::B) != (mc == PointClass::Exterior)) continue;
        case_possible = true;

        const Circle& host = r.constraints()[curve->host].circle;
        double th1 = host.angle_of(*pt1);
        double th2 = th1 + wrap_to_pi(host.angle_of(*pt2) - th1);
        Point arc_pt = host.at(0.5 * (th1 + th2));
        double s_host = dist(arc_pt, mid);
        double chord_half = 0.5 * dist(*pt1, *pt2);
        double sagitta;
        switch (scase) {
          case SsccCase::A1: sagitta = 0.25 * chord_half; break;
          case SsccCase::A2: sagitta = 0.5 * s_host; break;
          default: sagitta = 1.5 * s_host; break;
        }
        if (sagitta <= 4 * eps) continue;

        Circle added = make_sscc_circle(host, th1, th2, sagitta, scase);
        SSRegion cand = r.with_constraint({added, sscc_side(scase)});
        if (!cand.validate_fast().ok()) continue;
        PRGraph gh2, gv2;
        try {
          gh2 = compute_pr_graph(cand, gh.axis);
          gv2 = compute_pr_graph(cand, gv.axis);
        } catch (const Error&) {
          continue;
        }
        auto fresh = new_singulars(gh2, r.size());
        if (fresh.size() != 2) continue;
        if (fresh[0].kind != SingularKind::DoublePoint ||
            fresh[1].kind != SingularKind::DoublePoint)
          continue;
        std::vector<double> vals{sweep_coord(gh.axis, fresh[0].location),
                                 sweep_coord(gh.axis, fresh[1].location)};
        if (vals[1] - vals[0] <= 2 * eps) continue;
        if (vals.front() <= window.lo || vals.back() >= window.hi) continue;
        if (!check_corollary2(gh, gh2, target_edge)) continue;
        if (!old_singulars_persist(gh, gh2, 100 * eps)) continue;
        if (!cand.validate().ok()) continue;

        OpRecord rec;
        rec.kind = scase == SsccCase::A1
                       ? OpKind::SsccA1
                       : (scase == SsccCase::A2 ? OpKind::SsccA2 : OpKind::SsccB);
        rec.host = curve->host;
        rec.target_edge = address;
        rec.theta1 = th1;
        rec.theta2 = th2;
        rec.sagitta = sagitta;
        OpReport rep;
        rep.added = added;
        rep.new_values = vals;
        rep.pattern_verified = true;
        rep.search_iterations = iterations_used;
        return {std::move(cand), std::move(rec), std::move(rep)};
      }
    }
  }
  if (!any_candidate) throw NoCandidatePair("sscc: no admissible point pair on the edge");
  if (!case_possible)
    throw CaseInapplicable("sscc: requested case does not match the chord position");
  throw SearchBudgetExceeded("sscc: chord/bulge search exhausted its budget");
}

OpResult sscc(const SSRegion& r, int target_edge, SsccCase c, const OpOptions& opts) {
  PRGraph gh = compute_pr_graph(r, Axis::Horizontal);
  PRGraph gv = compute_pr_graph(r, Axis::Vertical);
  return sscc(r, gh, gv, target_edge, c, opts);
}

// ---- MBSSCC pair ------------------------------------------------------------

PairResult mbssc_pair(const SSRegion& r, const PRGraph& gh, const PRGraph& gv, int sibling_edge,
                      double epsilon_frac, const OpOptions& opts) {
  if (!(epsilon_frac > 0.0 && epsilon_frac < 1.0))
    throw InvalidParams("mbssc_pair: epsilon_frac must lie in (0,1)");
  if (sibling_edge < 0 || sibling_edge >= static_cast<int>(gh.edges.size()))
    throw Error("mbssc_pair: edge does not exist");
  const PREdge& e = gh.edges[sibling_edge];

  // MBCC sits on one arc of the edge preimage, the SSCC on the opposite one.
  bool mbcc_upper = !opts.prefer_lower_arc;
  auto mbcc_curve = edge_curve(r, gh, e, mbcc_upper);
  auto sscc_curve = edge_curve(r, gh, e, !mbcc_upper);
  if (!mbcc_curve || !sscc_curve)
    throw ArcPairNotFound("mbssc_pair: edge preimage does not provide two usable arcs");

  Interval window = effective_window(r, e, opts);
  std::optional<OpResult> sres;
  std::string reason = "no attempt ran";
  for (int attempt = 0; attempt < 6 && !sres; ++attempt) {
    double pull = 0.10 + 0.12 * attempt;  // chord pinned near the window edges,
                                          // pulled inward on retry
    double u1 = window.lo + pull * window.width();
    double u2 = window.hi - pull * window.width();
    auto p1 = curve_point(r, gh.axis, *sscc_curve, u1);
    auto p2 = curve_point(r, gh.axis, *sscc_curve, u2);
    if (!p1 || !p2) {
      reason = "opposite arc does not span the chord targets";
      continue;
    }
    PointClass mc = r.classify(0.5 * (*p1 + *p2));
    if (mc == PointClass::Boundary) {
      reason = "chord midpoint degenerate";
      continue;
    }
    SsccCase scase = mc == PointClass::Exterior ? SsccCase::B : SsccCase::A2;
    OpOptions so;
    so.window = window;
    so.prefer_lower_arc = mbcc_upper;  // opposite arc first
    so.chord_targets = {{u1, u2}};
    so.max_iterations = opts.max_iterations;
    try {
      sres = sscc(r, gh, gv, sibling_edge, scase, so);
    } catch (const Error& err) {
      reason = err.what();
    }
  }
  if (!sres) throw GeometricSearchFailed("mbssc_pair: sscc step failed: " + reason);

  double a21 = sres->report.new_values[0], a22 = sres->report.new_values[1];
  double eps_gap = epsilon_frac * (a22 - a21) / 2.0;
  Interval inner{a21 + eps_gap, a22 - eps_gap};

  PRGraph gh2 = compute_pr_graph(sres->region, gh.axis);
  PRGraph gv2 = compute_pr_graph(sres->region, gv.axis);
  auto probe = curve_point(sres->region, gh.axis, *mbcc_curve, inner.mid());
  if (!probe) throw GeometricSearchFailed("mbssc_pair: mbcc arc vanished after the sscc step");
  LocateResult mid_loc = locate(sres->region, gh2, *probe);
  if (mid_loc.is_vertex) throw GeometricSearchFailed("mbssc_pair: middle-edge probe hit a vertex");

  OpOptions mo;
  mo.window = inner;
  mo.upper_half = opts.upper_half;
  mo.prefer_lower_arc = !mbcc_upper;
  mo.max_iterations = opts.max_iterations;
  OpResult mres = mbcc(sres->region, gh2, gv2, mid_loc.id, mo);

  // net effect: corollary-1 pattern on the sibling edge plus one extra
  // degree-2 vertex on each adjacent pre-existing edge
  PRGraph gh3 = compute_pr_graph(mres.region, gh.axis);
  Tree before = gh.to_tree();
  std::string target = canonical_code_of(gh3);
  bool net_ok = false;
  for (bool first : {true, false}) {
    Tree cand = subdivide_edge(before, sibling_edge, 4);
    int m1 = cand.n - 3, m2 = cand.n - 2;  // middle two of the four new vertices
    Tree c2 = attach_path(cand, first ? m1 : m2, 1);
    net_ok |= canonical_code(c2) == target;
  }
  if (!net_ok) throw VerificationFailed("mbssc_pair: net graph pattern does not match");

  PairResult out{std::move(mres.region), sres->record, mres.record, {}};
  out.sscc_record.pair_member = true;
  out.mbcc_record.pair_member = true;
  out.report.added = mres.report.added;
  out.report.new_values = {a21, mres.report.new_values[0], mres.report.new_values[1],
                           mres.report.new_values[2], a22};
  out.report.pattern_verified = true;
  out.report.search_iterations = sres->report.search_iterations + mres.report.search_iterations;
  return out;
}

PairResult mbssc_pair(const SSRegion& r, int sibling_edge, double epsilon_frac,
                      const OpOptions& opts) {
  PRGraph gh = compute_pr_graph(r, Axis::Horizontal);
  PRGraph gv = compute_pr_graph(r, Axis::Vertical);
  return mbssc_pair(r, gh, gv, sibling_edge, epsilon_frac, opts);
}

// ---- replay -----------------------------------------------------------------

SSRegion replay(const Plan& plan) {
  SSRegion cur = plan.base;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const OpRecord& st = plan.steps[i];
    PRGraph gh, gv;
    try {
      gh = compute_pr_graph(cur, Axis::Horizontal);
      gv = compute_pr_graph(cur, Axis::Vertical);
    } catch (const Error& e) {
      throw ReplayDivergence("replay: step " + std::to_string(i) +
                             ": pre-state graphs failed: " + e.what());
    }
    int edge;
    try {
      edge = resolve_edge_address(gh, st.target_edge);
    } catch (const Error& e) {
      throw ReplayDivergence("replay: step " + std::to_string(i) + ": " + e.what());
    }
    if (st.host < 0 || st.host >= cur.size())
      throw ReplayDivergence("replay: step " + std::to_string(i) + ": bad host index");
    const Circle& host = cur.constraints()[st.host].circle;
    Circle added;
    Side side;
    if (st.kind == OpKind::Mbcc) {
      added = make_mbcc_circle(host, st.theta, st.radius);
      side = Side::KeepOutside;
    } else {
      SsccCase c = st.kind == OpKind::SsccA1
                       ? SsccCase::A1
                       : (st.kind == OpKind::SsccA2 ? SsccCase::A2 : SsccCase::B);
      added = make_sscc_circle(host, st.theta1, st.theta2, st.sagitta, c);
      side = sscc_side(c);
    }
    SSRegion next = cur.with_constraint({added, side});
    auto rep = next.validate();
    if (!rep.ok())
      throw ReplayDivergence("replay: step " + std::to_string(i) +
                             ": region invalid: " + rep.issues.front());
    PRGraph gh2;
    try {
      gh2 = compute_pr_graph(next, Axis::Horizontal);
      compute_pr_graph(next, Axis::Vertical);
    } catch (const Error& e) {
      throw ReplayDivergence("replay: step " + std::to_string(i) +
                             ": post-state graphs failed: " + e.what());
    }
    bool ok = st.kind == OpKind::Mbcc ? check_corollary1(gh, gh2, edge)
                                      : check_corollary2(gh, gh2, edge);
    if (!ok)
      throw ReplayDivergence("replay: step " + std::to_string(i) + ": pattern check failed");
    cur = std::move(next);
  }
  return cur;
}

}  // namespace reebcirc
