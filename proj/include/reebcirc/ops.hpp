#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebcirc/reeb.hpp"

namespace reebcirc {

enum class OpKind { Mbcc, SsccA1, SsccA2, SsccB };

inline const char* to_string(OpKind k) {
  switch (k) {
    case OpKind::Mbcc: return "mbcc";
    case OpKind::SsccA1: return "sscc_a1";
    case OpKind::SsccA2: return "sscc_a2";
    default: return "sscc_b";
  }
}

enum class SsccCase { A1, A2, B };

/// Realized anchors of one circle addition. Replaying the record through
/// make_mbcc_circle / make_sscc_circle reproduces the added circle bit for
/// bit, given the same host circle.
struct OpRecord {
  OpKind kind = OpKind::Mbcc;
  int host = -1;            // constraint index of the host circle
  std::string target_edge;  // canonical address in the pre-op horizontal graph
  double theta = 0.0;       // mbcc: anchor angle on the host circle
  double radius = 0.0;      // mbcc: added circle radius
  double theta1 = 0.0;      // sscc: host angles of p1, p2
  double theta2 = 0.0;
  double sagitta = 0.0;     // sscc: minor-arc sagitta over the chord
  bool pair_member = false; // set on the two records of an MBSSCC pair
};

struct OpReport {
  Circle added;
  std::vector<double> new_values;  // sweep values of the new singular points
  bool pattern_verified = false;
  int search_iterations = 0;
};

struct Plan {
  SSRegion base;
  std::vector<OpRecord> steps;
};

struct OpOptions {
  std::optional<Interval> window;  // all new singular values must land inside
  bool upper_half = false;         // anchor on constraint 0, y>0, circle in {y>0}
  bool prefer_lower_arc = false;   // candidate side order
  std::optional<std::pair<double, double>> chord_targets;  // sscc: fixed u for p1, p2
  int max_iterations = 40;
};

struct OpResult {
  SSRegion region;
  OpRecord record;
  OpReport report;
};

SSRegion unit_disk_region(Tolerance tol = {});

Circle make_mbcc_circle(const Circle& host, double theta, double radius);
Circle make_sscc_circle(const Circle& host, double theta1, double theta2, double sagitta,
                        SsccCase c);
Side sscc_side(SsccCase c);

/// Remove a small disk centered at a generic boundary point of the target
/// edge; searches anchor and radius until the Corollary 1 pattern verifies.
OpResult mbcc(const SSRegion& r, const PRGraph& gh, const PRGraph& gv, int target_edge,
              const OpOptions& opts = {});
OpResult mbcc(const SSRegion& r, int target_edge, const OpOptions& opts = {});

/// Cut (A-1, B) or intersect (A-2) with a circle through two close boundary
/// points of the target edge; Corollary 2 pattern enforced.
OpResult sscc(const SSRegion& r, const PRGraph& gh, const PRGraph& gv, int target_edge,
              SsccCase c, const OpOptions& opts = {});
OpResult sscc(const SSRegion& r, int target_edge, SsccCase c, const OpOptions& opts = {});

struct PairResult {
  SSRegion region;
  OpRecord sscc_record;
  OpRecord mbcc_record;
  OpReport report;  // five new values (two sscc + three mbcc), sorted
};

/// The proof's pair of MBSSCC additions: an SSCC (case A-2 or B) on the arc
/// opposite the MBCC arc, then an MBCC with its three values strictly inside
/// (a21 + eps, a22 - eps), eps = epsilon_frac * (a22 - a21) / 2.
PairResult mbssc_pair(const SSRegion& r, const PRGraph& gh, const PRGraph& gv, int sibling_edge,
                      double epsilon_frac, const OpOptions& opts = {});
PairResult mbssc_pair(const SSRegion& r, int sibling_edge, double epsilon_frac,
                      const OpOptions& opts = {});

/// Deterministic reconstruction; ReplayDivergence when validation or the
/// pattern checks fail on any step.
SSRegion replay(const Plan& plan);

}  // namespace reebcirc
