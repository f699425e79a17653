#include "hompoly/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hompoly {

namespace {

struct TupleHash
{
    std::size_t operator()(const VertexTuple& t) const
    {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& p : t)
            for (auto x : p)
                h = (h ^ static_cast<std::size_t>(x + 3)) * 1099511628211ULL;
        return h;
    }
};

class DisjointSets
{
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::size_t size_of(std::size_t x) { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs))
{
    if (perm_.size() != signs_.size())
        throw std::invalid_argument("signed permutation: length mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p])
            throw std::invalid_argument("signed permutation: not a bijection");
        seen[p] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw std::invalid_argument("signed permutation: signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(std::size_t n)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return SignedPermutation(std::move(perm), std::vector<int>(n, 1));
}

QVector SignedPermutation::act(const QVector& x) const
{
    if (x.size() != degree())
        throw std::invalid_argument("signed permutation: dimension mismatch");
    QVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[perm_[i]] = signs_[i] < 0 ? -x[i] : x[i];
    return y;
}

LatticePoint SignedPermutation::act(const LatticePoint& x) const
{
    if (x.size() != degree())
        throw std::invalid_argument("signed permutation: dimension mismatch");
    LatticePoint y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[perm_[i]] = signs_[i] * x[i];
    return y;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& h) const
{
    if (h.degree() != degree())
        throw std::invalid_argument("signed permutation: degree mismatch");
    std::vector<std::size_t> perm(degree());
    std::vector<int> signs(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
        perm[i] = perm_[h.perm_[i]];
        signs[i] = signs_[h.perm_[i]] * h.signs_[i];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

SignedPermutation SignedPermutation::inverse() const
{
    std::vector<std::size_t> perm(degree());
    std::vector<int> signs(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
        perm[perm_[i]] = i;
        signs[perm_[i]] = signs_[i];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

std::vector<SignedPermutation> enumerate_group(std::size_t n)
{
    if (n > kMaxGroupDegree)
        throw std::length_error("enumerate_group: degree above 6 is not supported");
    std::vector<SignedPermutation> out;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> signs(n);
            for (std::size_t i = 0; i < n; ++i)
                signs[i] = (mask >> i) & 1 ? -1 : 1;
            out.emplace_back(perm, std::move(signs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<SignedPermutation> stabilizer(const std::vector<SignedPermutation>& group, const LatticePoint& point)
{
    std::vector<SignedPermutation> out;
    for (const auto& g : group)
        if (g.act(point) == point)
            out.push_back(g);
    return out;
}

QVector act_point(const SignedPermutation& g, const QVector& x)
{
    return g.act(x);
}

LatticePoint act_point(const SignedPermutation& g, const LatticePoint& x)
{
    return g.act(x);
}

std::vector<QVector> act_tuple(const SignedPermutation& g, const std::vector<QVector>& t)
{
    std::vector<QVector> out;
    out.reserve(t.size());
    for (const auto& x : t)
        out.push_back(g.act(x));
    return out;
}

VertexTuple act_tuple(const SignedPermutation& g, const VertexTuple& t)
{
    VertexTuple out;
    out.reserve(t.size());
    for (const auto& x : t)
        out.push_back(g.act(x));
    return out;
}

OrbitCount orbit_count(const std::vector<VertexTuple>& tuples, const std::vector<SignedPermutation>& group)
{
    std::unordered_map<VertexTuple, std::size_t, TupleHash> index;
    index.reserve(tuples.size() * 2);
    for (std::size_t i = 0; i < tuples.size(); ++i)
        index.emplace(tuples[i], i);
    if (index.size() != tuples.size())
        throw std::invalid_argument("orbit_count: repeated tuples");

    DisjointSets sets(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (const auto& g : group) {
            const auto it = index.find(act_tuple(g, tuples[i]));
            if (it == index.end())
                throw std::invalid_argument("orbit_count: tuple set is not closed under the group");
            sets.unite(i, it->second);
        }
    }
    OrbitCount out;
    out.free = true;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (sets.find(i) != i)
            continue;
        ++out.orbits;
        if (sets.size_of(i) != group.size())
            out.free = false;
    }
    return out;
}

} // namespace hompoly
