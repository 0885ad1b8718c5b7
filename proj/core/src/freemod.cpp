#include "halg/freemod.hpp"

#include <sstream>

namespace halg {

void Vec::add(int i, const RingElement& c) {
    if (i < 0) fail(Err::BadArgument, "negative basis index");
    if (c.is_zero()) return;
    auto it = e_.find(i);
    if (it == e_.end()) {
        e_.emplace(i, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) e_.erase(it);
    }
}

Vec& Vec::operator+=(const Vec& o) {
    if (!valid()) *this = Vec(o.ring_);
    for (const auto& [i, c] : o.e_) add(i, c);
    return *this;
}

Vec Vec::operator+(const Vec& o) const {
    Vec r = *this;
    r += o;
    return r;
}

Vec Vec::operator-() const {
    Vec r(ring_);
    for (const auto& [i, c] : e_) r.e_.emplace(i, -c);
    return r;
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::scaled(const RingElement& c) const {
    Vec r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [i, x] : e_) r.add(i, c * x);
    return r;
}

Vec Vec::int_scaled(long long n) const { return scaled(RingElement::from_int(ring_, n)); }

bool Vec::operator==(const Vec& o) const { return e_ == o.e_; }

std::string Vec::str() const {
    if (e_.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : e_) {
        if (!s.empty()) s += " ";
        s += std::to_string(i) + ":" + c.str();
    }
    return s;
}

void TensorVec::add(const Vec& left, int right) {
    if (right < 0) fail(Err::BadArgument, "negative basis index");
    if (left.is_zero()) return;
    if (!ring_) ring_ = left.ring();
    auto it = parts_.find(right);
    if (it == parts_.end()) {
        parts_.emplace(right, left);
    } else {
        it->second += left;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

TensorVec& TensorVec::operator+=(const TensorVec& o) {
    for (const auto& [j, l] : o.parts_) add(l, j);
    return *this;
}

TensorVec TensorVec::operator-(const TensorVec& o) const {
    TensorVec r = *this;
    for (const auto& [j, l] : o.parts_) r.add(-l, j);
    return r;
}

void TensorVec::renormalize() {
    for (auto it = parts_.begin(); it != parts_.end();)
        it = it->second.is_zero() ? parts_.erase(it) : std::next(it);
}

bool TensorVec::operator==(const TensorVec& o) const { return parts_ == o.parts_; }

std::string TensorVec::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (const auto& [j, l] : parts_) {
        if (!s.empty()) s += " + ";
        s += "(" + l.str() + ") (x) e_" + std::to_string(j);
    }
    return s;
}

void Tensor3::add(const Vec& left, int mid, int right) {
    if (left.is_zero()) return;
    if (!ring_) ring_ = left.ring();
    auto key = std::make_pair(mid, right);
    auto it = parts_.find(key);
    if (it == parts_.end()) {
        parts_.emplace(key, left);
    } else {
        it->second += left;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

bool Tensor3::operator==(const Tensor3& o) const { return parts_ == o.parts_; }

std::string Tensor3::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (const auto& [key, l] : parts_) {
        if (!s.empty()) s += " + ";
        s += "(" + l.str() + ") (x) e_" + std::to_string(key.first) + " (x) e_" +
             std::to_string(key.second);
    }
    return s;
}

DualVec DualVec::basis_dual(const RingPtr& R, int i, int W) {
    if (i >= W) fail(Err::WindowExceeded, "dual basis index past window");
    DualVec d = zero(R, W);
    d.table[i] = RingElement::one(R);
    return d;
}

bool DualVec::is_zero() const {
    for (const auto& c : table)
        if (!c.is_zero()) return false;
    return true;
}

std::string DualVec::str() const {
    std::string s;
    for (size_t i = 0; i < table.size(); ++i) {
        if (table[i].is_zero()) continue;
        if (!s.empty()) s += " ";
        s += std::to_string(i) + ":" + table[i].str();
    }
    return s.empty() ? "0" : s;
}

RingElement dual_pair(const DualVec& D, const Vec& v) {
    if (!same_ring(D.ring, v.ring()))
        fail(Err::DescriptorMismatch, "dual and vector over different rings");
    RingElement acc = RingElement::zero(D.ring);
    for (const auto& [i, c] : v.entries()) {
        if (i >= D.window()) {
            if (D.finite_support) continue;  // promised to vanish out there
            fail(Err::WindowExceeded, "vector supported at index " + std::to_string(i) +
                                          " beyond dual window " + std::to_string(D.window()));
        }
        acc = acc + c * D.table[i];
    }
    return acc;
}

std::vector<DualVec> standard_duals(const RingPtr& R, int W) {
    std::vector<DualVec> out;
    out.reserve(W);
    for (int i = 0; i < W; ++i) out.push_back(DualVec::basis_dual(R, i, W));
    return out;
}

bool double_dual_check(const std::vector<DualVec>& duals, int k, int W) {
    if (k < 0 || k >= W || k >= static_cast<int>(duals.size()))
        fail(Err::WindowExceeded, "row index past window");
    for (int j = 0; j < W; ++j) {
        RingElement v = dual_pair(duals[k], Vec::basis(duals[k].ring, j));
        if (j == k ? !v.is_one() : !v.is_zero()) return false;
    }
    return true;
}

bool double_dual_check(const std::vector<DualVec>& duals, int W) {
    if (static_cast<int>(duals.size()) < W) return false;
    for (int k = 0; k < W; ++k)
        if (!double_dual_check(duals, k, W)) return false;
    return true;
}

}  // namespace halg
