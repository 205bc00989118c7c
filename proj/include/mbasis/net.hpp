#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "mbasis/compact_set.hpp"
#include "mbasis/point.hpp"

namespace mbasis {

/// A finite eps-net of A_lambda: every member of the set lies within eps (in
/// the ambient norm) of some net point, and every net point is a member.
///
/// Construction. Grid points have moduli on a uniform step delta and phases
/// on per-ring uniform grids fine enough that snapping any coordinate moves
/// it by at most 2*delta; flooring the modulus never leaves the set because
/// both variants are solid. The step is sized from how much a per-coordinate
/// perturbation can move the ambient norm:
///
///  - Block variant: coordinates in blocks past the largest m with
///    lambda_m > eps/2 are dropped first; the remaining tail of any member
///    has norm at most eps/2 because those block constraints cap it
///    directly. The gridded slice then needs covering radius eps/2, so
///    delta ~ eps / (4 m0^{1/p}) over the s(m0) kept coordinates.
///  - Lorentz variant: the rearrangement constraints say nothing positional,
///    so no coordinate can be dropped; all L prefix coordinates are gridded
///    with covering radius eps, delta ~ eps W_L / (2 L).
///
/// Members are enumerated per block (block variant) or filtered by
/// membership (Lorentz variant), so the net is a subset of A_lambda by
/// construction. snap() maps any member to its grid point and is the
/// constructive coverage witness.
class EpsilonNet {
  public:
    EpsilonNet(const CompactSetSpec& spec, double eps);

    const CompactSetSpec& spec() const { return spec_; }
    double eps() const { return eps_; }
    double grid_step() const { return delta_; }
    /// Number of leading coordinates carried by the grid (0 for the {0} net).
    std::uint32_t gridded_dimension() const { return dimension_; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(const Point& p) const;

    /// The net point covering a member of A_lambda: each kept coordinate has
    /// its modulus floored to the grid and its phase snapped to the ring.
    Point snap(const Point& member) const;

  private:
    void build_block();
    void build_lorentz();
    void insert(Point p);

    CompactSetSpec spec_;
    double eps_;
    double delta_ = 0.0;
    std::uint32_t dimension_ = 0;
    std::vector<Point> points_;
    std::unordered_set<std::string> keys_;
};

/// The net as a plain list of members.
std::vector<Point> epsilon_net(const CompactSetSpec& spec, double eps);

}  // namespace mbasis
