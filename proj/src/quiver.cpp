#include "dpva/quiver.hpp"

#include "dpva/errors.hpp"

namespace dpva {

int Quiver::add_vertex(std::string name) {
    if (vertex(name) >= 0) throw Error("duplicate vertex '" + name + "'");
    vertices_.push_back(std::move(name));
    return num_vertices() - 1;
}

int Quiver::add_arrow(std::string name, int tail, int head) {
    if (arrow(name) >= 0) throw Error("duplicate arrow '" + name + "'");
    if (tail < 0 || tail >= num_vertices() || head < 0 || head >= num_vertices())
        throw Error("arrow '" + name + "' references an undeclared vertex");
    Arrow a;
    a.name = std::move(name);
    a.tail = tail;
    a.head = head;
    arrows_.push_back(std::move(a));
    return num_arrows() - 1;
}

int Quiver::make_invertible(int id) {
    Arrow& a = arrows_.at(id);
    if (a.inverse >= 0) return a.inverse;
    std::string inv_name = a.name + "^-1";
    int tail = a.head, head = a.tail;
    int inv = add_arrow(inv_name, tail, head);
    arrows_[id].inverse = inv;
    arrows_[inv].inverse = id;
    arrows_[inv].is_inverse = true;
    return inv;
}

void Quiver::set_star(int a, int b) {
    Arrow& x = arrows_.at(a);
    Arrow& y = arrows_.at(b);
    if (x.tail != y.head || x.head != y.tail)
        throw Error("star partner '" + y.name + "' must reverse '" + x.name + "'");
    x.star = b;
    y.star = a;
    x.epsilon = 1;
    y.epsilon = -1;
}

int Quiver::vertex(std::string_view name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices_[i] == name) return i;
    return -1;
}

int Quiver::arrow(std::string_view name) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows_[i].name == name) return i;
    return -1;
}

bool Quiver::cancels(Letter a, Letter b) const {
    if (order_of(a) != 0 || order_of(b) != 0) return false;
    int inv = arrows_[arrow_of(a)].inverse;
    return inv >= 0 && inv == arrow_of(b);
}

bool Quiver::has_inverses() const {
    for (const auto& a : arrows_)
        if (a.inverse >= 0) return true;
    return false;
}

bool Quiver::is_double() const {
    if (arrows_.empty()) return false;
    for (const auto& a : arrows_)
        if (a.star < 0) return false;
    return true;
}

void Quiver::set_jet(int cap) {
    if (has_inverses()) throw InversesNotJettable();
    if (cap < 0 || cap > kMaxJetOrder) throw CapExceeded("jet cap out of range");
    jet_ = true;
    jet_cap_ = cap;
}

std::string Quiver::letter_name(Letter l) const {
    const std::string& n = arrows_.at(arrow_of(l)).name;
    int k = order_of(l);
    if (k == 0) return n;
    return "D^" + std::to_string(k) + "(" + n + ")";
}

void Quiver::validate() const {
    for (const auto& a : arrows_) {
        if (a.tail < 0 || a.tail >= num_vertices() || a.head < 0 || a.head >= num_vertices())
            throw Error("arrow '" + a.name + "' has a dangling endpoint");
        if (a.inverse >= 0) {
            const Arrow& b = arrows_.at(a.inverse);
            if (b.inverse < 0 || &arrows_.at(b.inverse) != &a || b.tail != a.head || b.head != a.tail)
                throw Error("inverse pairing of '" + a.name + "' is inconsistent");
        }
    }
}

QuiverPtr jet_quiver(const Quiver& q, int cap) {
    auto j = std::make_shared<Quiver>(q);
    j->set_jet(cap);
    return j;
}

QuiverPtr base_quiver(const Quiver& q) {
    Quiver b;
    for (int v = 0; v < q.num_vertices(); ++v) b.add_vertex(q.vertex_name(v));
    for (const auto& a : q.arrows()) {
        if (a.is_inverse) continue;
        int id = b.add_arrow(a.name, a.tail, a.head);
        if (a.inverse >= 0) b.make_invertible(id);
    }
    for (const auto& a : q.arrows())
        if (a.epsilon == 1) b.set_star(b.arrow(a.name), b.arrow(q.arrow_at(a.star).name));
    return std::make_shared<Quiver>(std::move(b));
}

}  // namespace dpva
