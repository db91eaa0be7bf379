#include "cylproj/onedim.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "cylproj/error.hpp"

namespace cylproj {

Rat rat_pow(const Rat& q, unsigned long n) {
    if (n == 0) return Rat(1);
    if (n == 1) return q;
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), n);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), n);
    return r;
}

std::optional<Rat> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num(text.substr(0, slash));
    if (!digits(num)) return std::nullopt;
    if (slash == std::string_view::npos) {
        mpz_class n(num);
        return Rat(n);
    }
    std::string den(text.substr(slash + 1));
    if (!digits(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rat_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_decimal(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", r.get_d());
    return buf;
}

OneDimSet::OneDimSet() : breaks_{Rat(0), Rat(1)}, open_{false}, point_{false} {}

OneDimSet::OneDimSet(std::vector<Rat> breakpoints, std::vector<bool> open_flags,
                     std::vector<bool> point_flags)
    : breaks_(std::move(breakpoints)), open_(std::move(open_flags)), point_(std::move(point_flags)) {
    if (breaks_.size() < 2 || breaks_.front() != 0 || breaks_.back() != 1)
        throw std::invalid_argument("partition must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
    if (open_.size() != breaks_.size() - 1 || point_.size() != breaks_.size() - 1)
        throw std::invalid_argument("flag count does not match partition");
    canonicalize();
}

void OneDimSet::canonicalize() {
    std::vector<Rat> nb;
    std::vector<bool> no, np;
    nb.push_back(breaks_[0]);
    np.push_back(point_[0]);
    no.push_back(open_[0]);
    for (std::size_t i = 1; i + 1 < breaks_.size(); ++i) {
        if (open_[i - 1] == open_[i] && point_[i] == open_[i]) continue;  // removable
        nb.push_back(breaks_[i]);
        np.push_back(point_[i]);
        no.push_back(open_[i]);
    }
    nb.push_back(breaks_.back());
    breaks_ = std::move(nb);
    open_ = std::move(no);
    point_ = std::move(np);
}

OneDimSet OneDimSet::empty_set() { return OneDimSet(); }

OneDimSet OneDimSet::full_set() {
    return OneDimSet({Rat(0), Rat(1)}, {true}, {true});
}

OneDimSet OneDimSet::interval(const Rat& lo, const Rat& hi) {
    if (!(lo < hi) || lo < 0 || hi > 1)
        throw std::invalid_argument("interval requires 0 <= lo < hi <= 1");
    std::vector<Rat> b{Rat(0)};
    if (lo != 0) b.push_back(lo);
    b.push_back(hi);
    if (hi != 1) b.push_back(Rat(1));
    std::vector<bool> open(b.size() - 1, false), point(b.size() - 1, false);
    std::size_t seg = (lo != 0) ? 1 : 0;
    open[seg] = true;
    point[seg] = true;
    return OneDimSet(std::move(b), std::move(open), std::move(point));
}

OneDimSet OneDimSet::open_interval(const Rat& lo, const Rat& hi) {
    if (!(lo < hi) || lo < 0 || hi > 1)
        throw std::invalid_argument("interval requires 0 <= lo < hi <= 1");
    std::vector<Rat> b{Rat(0)};
    if (lo != 0) b.push_back(lo);
    b.push_back(hi);
    if (hi != 1) b.push_back(Rat(1));
    std::vector<bool> open(b.size() - 1, false), point(b.size() - 1, false);
    open[(lo != 0) ? 1 : 0] = true;
    return OneDimSet(std::move(b), std::move(open), std::move(point));
}

OneDimSet OneDimSet::point(const Rat& p) {
    if (p < 0 || p >= 1) throw std::invalid_argument("point must lie in [0,1)");
    std::vector<Rat> b{Rat(0)};
    if (p != 0) b.push_back(p);
    b.push_back(Rat(1));
    std::vector<bool> open(b.size() - 1, false), point(b.size() - 1, false);
    point[(p != 0) ? 1 : 0] = true;
    return OneDimSet(std::move(b), std::move(open), std::move(point));
}

bool OneDimSet::is_empty() const {
    for (bool f : open_)
        if (f) return false;
    for (bool f : point_)
        if (f) return false;
    return true;
}

bool OneDimSet::is_full() const {
    // canonical full is {0,1} with both flags set
    return breaks_.size() == 2 && open_[0] && point_[0];
}

bool OneDimSet::contains(const Rat& x) const {
    if (x < 0 || x >= 1) return false;
    // find largest i with breaks_[i] <= x
    std::size_t lo = 0, hi = breaks_.size() - 1;
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (breaks_[mid] <= x)
            lo = mid;
        else
            hi = mid;
    }
    if (breaks_[lo] == x) return point_[lo];
    return open_[lo];
}

Rat OneDimSet::length() const {
    Rat total(0);
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (open_[i]) total += breaks_[i + 1] - breaks_[i];
    return total;
}

bool OneDimSet::operator==(const OneDimSet& other) const {
    return breaks_ == other.breaks_ && open_ == other.open_ && point_ == other.point_;
}

namespace {

std::vector<Rat> merge_breaks(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// open/point flags of `a` refined onto `grid` (grid contains a's breakpoints)
void refine(const OneDimSet& a, const std::vector<Rat>& grid, std::vector<bool>& open,
            std::vector<bool>& point) {
    const auto& ab = a.breakpoints();
    open.assign(grid.size() - 1, false);
    point.assign(grid.size() - 1, false);
    std::size_t j = 0;  // segment of a containing grid[i]
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        while (j + 2 < ab.size() && ab[j + 1] <= grid[i]) ++j;
        point[i] = (ab[j] == grid[i]) ? a.point_flags()[j] : a.open_flags()[j];
        open[i] = a.open_flags()[j];
    }
}

}  // namespace

OneDimSet unite(const OneDimSet& a, const OneDimSet& b) {
    auto grid = merge_breaks(a.breakpoints(), b.breakpoints());
    std::vector<bool> ao, ap, bo, bp;
    refine(a, grid, ao, ap);
    refine(b, grid, bo, bp);
    for (std::size_t i = 0; i < ao.size(); ++i) {
        ao[i] = ao[i] || bo[i];
        ap[i] = ap[i] || bp[i];
    }
    return OneDimSet(std::move(grid), std::move(ao), std::move(ap));
}

OneDimSet intersect(const OneDimSet& a, const OneDimSet& b) {
    auto grid = merge_breaks(a.breakpoints(), b.breakpoints());
    std::vector<bool> ao, ap, bo, bp;
    refine(a, grid, ao, ap);
    refine(b, grid, bo, bp);
    for (std::size_t i = 0; i < ao.size(); ++i) {
        ao[i] = ao[i] && bo[i];
        ap[i] = ap[i] && bp[i];
    }
    return OneDimSet(std::move(grid), std::move(ao), std::move(ap));
}

OneDimSet complement(const OneDimSet& a) {
    std::vector<Rat> grid = a.breakpoints();
    std::vector<bool> open(a.open_flags()), point(a.point_flags());
    open.flip();
    point.flip();
    return OneDimSet(std::move(grid), std::move(open), std::move(point));
}

std::vector<bool> cell_flags(const OneDimSet& a, const std::vector<Rat>& grid) {
    std::vector<bool> open, point;
    refine(a, grid, open, point);
    std::vector<bool> out(2 * (grid.size() - 1));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        out[2 * i] = point[i];
        out[2 * i + 1] = open[i];
    }
    return out;
}

OneDimSet cells_to_set(const std::vector<Rat>& grid, int c_first, int c_last) {
    std::size_t n = grid.size() - 1;
    std::vector<bool> open(n, false), point(n, false);
    for (int c = c_first; c <= c_last; ++c) {
        if (c % 2 == 0)
            point[c / 2] = true;
        else
            open[c / 2] = true;
    }
    return OneDimSet(grid, std::move(open), std::move(point));
}

}  // namespace cylproj
