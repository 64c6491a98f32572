#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ogsr/compare.hpp"
#include "ogsr/numeric.hpp"

namespace ogsr {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Scalar carriers store one rational; every vector carrier (polynomial,
// truncated series, pair, structure-constant coordinates) stores a
// coefficient list. Instances keep payloads canonical, so equality of
// elements is plain payload equality.
using Coords = std::vector<Rat>;
using Payload = std::variant<Rat, Coords>;

inline bool payload_equal(const Payload& a, const Payload& b) { return a == b; }

inline const Rat& as_rat(const Payload& p) { return std::get<Rat>(p); }
inline const Coords& as_coords(const Payload& p) { return std::get<Coords>(p); }

// Immutable value handle: a payload plus the instance that interprets it.
class Element {
public:
    Element(RingPtr ring, Payload payload)
        : ring_(std::move(ring)), payload_(std::move(payload)) {}

    const RingPtr& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }

    const Rat& rat() const { return as_rat(payload_); }
    const Coords& coords() const { return as_coords(payload_); }

    bool is_zero() const;
    std::string str() const;

private:
    RingPtr ring_;
    Payload payload_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Element& a, const Element& b);
bool operator==(const Element& a, const Element& b);
bool operator!=(const Element& a, const Element& b);

// Partial-order verdict under the instance's order.
Comparison compare(const Element& a, const Element& b);

} // namespace ogsr
