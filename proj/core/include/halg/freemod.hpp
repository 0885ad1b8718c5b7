#pragma once

#include <map>
#include <utility>
#include <vector>

#include "halg/rings.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// Windowed free modules.
//
// A free module comes with a basis e_0, e_1, ... of which only the first W
// indices (the window) are materialized.  Vectors are sparse maps
// index -> coefficient in normal form (no zero entries).  Tensor squares of
// a free module over two different scalar actions keep the normal form
// "all coefficients on the left factor": a TensorVec maps each pure right
// basis index j to the left-factor vector sitting against e_j.
// ---------------------------------------------------------------------------

struct BasisIndex {
    int index = 0;
    int level = 0;  // filtration level; defaults to the index itself
};

class Vec {
  public:
    Vec() = default;
    explicit Vec(RingPtr ring) : ring_(std::move(ring)) {}
    static Vec basis(const RingPtr& ring, int i) {
        Vec v(ring);
        v.add(i, RingElement::one(ring));
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }
    bool is_zero() const { return e_.empty(); }
    const std::map<int, RingElement>& entries() const { return e_; }
    RingElement coeff(int i) const {
        auto it = e_.find(i);
        return it == e_.end() ? RingElement::zero(ring_) : it->second;
    }
    int max_index() const { return e_.empty() ? -1 : e_.rbegin()->first; }

    void add(int i, const RingElement& c);
    Vec& operator+=(const Vec& o);
    Vec operator+(const Vec& o) const;
    Vec operator-() const;
    Vec operator-(const Vec& o) const;
    Vec scaled(const RingElement& c) const;   // coefficientwise left A-action
    Vec int_scaled(long long n) const;
    bool operator==(const Vec& o) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }
    std::string str() const;

  private:
    RingPtr ring_;
    std::map<int, RingElement> e_;
};

// Normal form of an element of (free module) tensor (free module): right
// factor is a pure basis index, all coefficients live in the left factor.
class TensorVec {
  public:
    TensorVec() = default;
    explicit TensorVec(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return parts_.empty(); }
    const std::map<int, Vec>& parts() const { return parts_; }
    Vec left_of(int j) const {
        auto it = parts_.find(j);
        return it == parts_.end() ? Vec(ring_) : it->second;
    }

    void add(const Vec& left, int right);
    TensorVec& operator+=(const TensorVec& o);
    TensorVec operator-(const TensorVec& o) const;
    // Drop zero parts; the stored form is already normal, so this is
    // idempotent by construction.
    void renormalize();
    bool operator==(const TensorVec& o) const;
    bool operator!=(const TensorVec& o) const { return !(*this == o); }
    std::string str() const;

  private:
    RingPtr ring_;
    std::map<int, Vec> parts_;
};

// Triple tensor normal form: coefficients on the left, pure middle/right.
class Tensor3 {
  public:
    Tensor3() = default;
    explicit Tensor3(RingPtr ring) : ring_(std::move(ring)) {}

    bool is_zero() const { return parts_.empty(); }
    const std::map<std::pair<int, int>, Vec>& parts() const { return parts_; }

    void add(const Vec& left, int mid, int right);
    bool operator==(const Tensor3& o) const;
    bool operator!=(const Tensor3& o) const { return !(*this == o); }
    std::string str() const;

  private:
    RingPtr ring_;
    std::map<std::pair<int, int>, Vec> parts_;
};

// A-linear functional on the windowed free module: value table on the first
// `window` basis indices.  finite_support records whether the functional is
// promised to vanish beyond the window (true for everything built from the
// standard duals; false for genuinely windowed unknowns).
struct DualVec {
    RingPtr ring;
    std::vector<RingElement> table;
    bool finite_support = false;

    int window() const { return static_cast<int>(table.size()); }
    static DualVec zero(const RingPtr& R, int W) {
        return DualVec{R, std::vector<RingElement>(W, RingElement::zero(R)), true};
    }
    static DualVec basis_dual(const RingPtr& R, int i, int W);
    bool is_zero() const;
    bool operator==(const DualVec& o) const { return table == o.table; }
    std::string str() const;
};

// <D, v>; errors with WindowExceeded if v is supported past D's window.
RingElement dual_pair(const DualVec& D, const Vec& v);

// The standard dual table e_0^, ..., e_{W-1}^.
std::vector<DualVec> standard_duals(const RingPtr& R, int W);

// True iff the pairing matrix <duals[i], e_j> on the window is the identity.
bool double_dual_check(const std::vector<DualVec>& duals, int W);
// Row-k variant: checks <duals[k], e_j> = delta_{kj} only.
bool double_dual_check(const std::vector<DualVec>& duals, int k, int W);

}  // namespace halg
