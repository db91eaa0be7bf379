#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "cylproj/findim.hpp"
#include "cylproj/rational.hpp"

namespace cylproj {

/// A finite or cofinite set of atoms of a countable base, referenced by
/// index. Cofinite sets contain every atom outside `members`, in particular
/// all unnamed tail atoms.
class AtomSet {
public:
    AtomSet() : cofinite_(false) {}  // empty
    static AtomSet finite(std::set<std::uint32_t> members);
    static AtomSet cofinite(std::set<std::uint32_t> excluded);
    static AtomSet empty_set() { return AtomSet(); }
    static AtomSet full_set() { return cofinite({}); }

    bool is_cofinite() const { return cofinite_; }
    const std::set<std::uint32_t>& members() const { return members_; }
    bool is_empty() const { return !cofinite_ && members_.empty(); }
    bool is_full() const { return cofinite_ && members_.empty(); }
    bool contains(std::uint32_t atom) const;

    bool operator==(const AtomSet& o) const {
        return cofinite_ == o.cofinite_ && members_ == o.members_;
    }
    bool operator!=(const AtomSet& o) const { return !(*this == o); }

private:
    bool cofinite_;
    std::set<std::uint32_t> members_;  // listed (finite) or excluded (cofinite)
};

AtomSet unite(const AtomSet& a, const AtomSet& b);
AtomSet intersect(const AtomSet& a, const AtomSet& b);
AtomSet complement(const AtomSet& a);

/// A discrete probability base: finitely many named atoms with positive
/// rational probabilities, plus a collective tail mass carried by the
/// unnamed atoms. tail_mass = 0 models a finite atom space.
class DiscreteBase {
public:
    DiscreteBase(std::vector<Rat> named_probs, Rat tail_mass);

    std::size_t named_count() const { return probs_.size(); }
    const std::vector<Rat>& named_probs() const { return probs_; }
    const Rat& tail_mass() const { return tail_; }

    Rat atom_prob(std::uint32_t atom) const;  // UnknownAtom beyond named range
    Rat measure1(const AtomSet& s) const;     // one-dimensional measure

private:
    std::vector<Rat> probs_;
    Rat tail_;
};

using DiscreteTerm = std::map<DimVar, AtomSet>;  // no full/empty components

namespace detail {
struct DsetImpl;
struct DiscEngine;
struct DiscCanonForm;
}  // namespace detail

/// Finite union of product terms over a countable atom space; the discrete
/// mirror of FinDimSet.
class DiscreteSet {
public:
    DiscreteSet();
    explicit DiscreteSet(std::vector<DiscreteTerm> terms);
    ~DiscreteSet();
    DiscreteSet(const DiscreteSet&);
    DiscreteSet(DiscreteSet&&) noexcept;
    DiscreteSet& operator=(const DiscreteSet&);
    DiscreteSet& operator=(DiscreteSet&&) noexcept;

    static DiscreteSet empty_set();
    static DiscreteSet unit();
    static DiscreteSet box(const DiscreteTerm& components);

    const std::vector<DiscreteTerm>& terms() const;
    bool contains(const std::map<DimVar, std::uint32_t>& point) const;

    const detail::DiscEngine& engine() const;
    const detail::DiscCanonForm& canonical() const;

private:
    std::shared_ptr<const detail::DsetImpl> impl_;
};

DiscreteSet unite(const DiscreteSet& a, const DiscreteSet& b);
DiscreteSet intersect(const DiscreteSet& a, const DiscreteSet& b);
DiscreteSet complement(const DiscreteSet& a);

bool is_empty(const DiscreteSet& a);
bool is_unit(const DiscreteSet& a);
bool subset(const DiscreteSet& a, const DiscreteSet& b);
bool set_equal(const DiscreteSet& a, const DiscreteSet& b);

std::set<DimVar> dim_set(const DiscreteSet& a);
DiscreteSet cylindrify(const DiscreteSet& a, DimVar y);
DiscreteSet co_cylindrify(const DiscreteSet& a, DimVar y);
DiscreteSet substitute(const DiscreteSet& a, DimVar from, DimVar to);
DiscreteSet compacted(const DiscreteSet& a);

}  // namespace cylproj
