#pragma once

#include <memory>
#include <string>

#include "dpva/tensor.hpp"

namespace fx {

using namespace dpva;

// one vertex "1", loops named in order
inline std::shared_ptr<Quiver> loops(std::initializer_list<const char*> names) {
    auto q = std::make_shared<Quiver>();
    q->add_vertex("1");
    for (const char* n : names) q->add_arrow(n, 0, 0);
    return q;
}

// Q_{p,q}: v_i : 1 -> 2, w_j : 2 -> 1
inline std::shared_ptr<Quiver> qpq(int p, int qn) {
    auto q = std::make_shared<Quiver>();
    q->add_vertex("1");
    q->add_vertex("2");
    for (int i = 1; i <= p; ++i) q->add_arrow("v" + std::to_string(i), 0, 1);
    for (int j = 1; j <= qn; ++j) q->add_arrow("w" + std::to_string(j), 1, 0);
    return q;
}

inline Letter L(const Quiver& q, const std::string& name, int order = 0) {
    return make_letter(q.arrow(name), order);
}

inline NCPoly X(const QuiverPtr& q, const std::string& name, int order = 0) {
    return nc_letter(q, L(*q, name, order));
}

inline NCPoly E(const QuiverPtr& q, int v) { return nc_idem(q, v); }

inline NCPoly one(const QuiverPtr& q) { return nc_one(q); }

}  // namespace fx
