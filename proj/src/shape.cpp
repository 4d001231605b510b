#include "gmecert/shape.hpp"

#include <atomic>
#include <bit>

#include "gmecert/errors.hpp"

namespace gmecert {

namespace {
std::atomic<int> g_dimension_cap{4096};
}

int dimension_cap() { return g_dimension_cap.load(std::memory_order_relaxed); }

void set_dimension_cap(int cap) {
    if (cap < 2) throw contract_error("dimension cap must be at least 2");
    g_dimension_cap.store(cap, std::memory_order_relaxed);
}

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw contract_error("system shape requires at least one subsystem");
    if (dims_.size() > 30) throw size_error("subsystem count exceeds the supported mask width");
    long long total = 1;
    const long long cap = dimension_cap();
    for (int d : dims_) {
        if (d < 2) throw contract_error("every local dimension must be at least 2");
        total *= d;
        if (total > cap) throw size_error("total dimension exceeds the configured cap");
    }
    total_dim_ = static_cast<int>(total);
    strides_.assign(dims_.size(), 1);
    for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k) {
        strides_[k] = strides_[k + 1] * dims_[k + 1];
    }
}

bool SystemShape::homogeneous() const {
    for (int d : dims_) {
        if (d != dims_.front()) return false;
    }
    return true;
}

SubsetMask::SubsetMask(std::uint32_t bits, SystemShape shape)
    : bits_(bits), shape_(std::move(shape)) {
    const std::uint32_t full = (1u << shape_.subsystem_count()) - 1u;
    if (bits_ == 0) throw contract_error("subset mask must be nonempty");
    if ((bits_ & ~full) != 0) {
        throw contract_error("subset mask addresses subsystems outside the shape");
    }
}

int SubsetMask::size() const { return std::popcount(bits_); }

bool SubsetMask::is_proper() const { return size() < shape_.subsystem_count(); }

void SubsetMask::require_proper(const char* operation) const {
    if (!is_proper()) {
        throw contract_error(std::string(operation) + " requires a proper subset (a bipartite cut)");
    }
}

std::vector<int> SubsetMask::members() const {
    std::vector<int> out;
    for (int i = 0; i < shape_.subsystem_count(); ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

SubsetMask SubsetMask::complement() const {
    require_proper("complement");
    const std::uint32_t full = (1u << shape_.subsystem_count()) - 1u;
    return SubsetMask(full & ~bits_, shape_);
}

long long SubsetMask::dim() const {
    long long d = 1;
    for (int i : members()) d *= shape_.local_dim(i);
    return d;
}

long long SubsetMask::complement_dim() const { return shape_.total_dim() / dim(); }

std::string SubsetMask::label() const {
    std::string out = "{";
    bool first = true;
    for (int i : members()) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

std::string SubsetMask::cut_label() const {
    return label() + "|" + complement().label();
}

std::vector<SubsetMask> all_cuts(const SystemShape& shape) {
    const int n = shape.subsystem_count();
    if (n < 2) throw contract_error("cut enumeration requires at least two subsystems");
    std::vector<SubsetMask> out;
    const std::uint32_t full = (1u << n) - 1u;
    out.reserve(full - 1);
    for (std::uint32_t bits = 1; bits < full; ++bits) {
        out.emplace_back(bits, shape);
    }
    return out;
}

} // namespace gmecert
