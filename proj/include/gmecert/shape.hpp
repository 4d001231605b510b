#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmecert {

// Total-dimension cap for the dense kernels (default 4096). The CLI maps the
// GME_DIM_CAP environment variable onto set_dimension_cap at startup.
int dimension_cap();
void set_dimension_cap(int cap);

// Ordered local dimensions (d_1, ..., d_N) of an N-partite system.
//
// Composite basis indices are mixed-radix with subsystem 1 as the MOST
// significant digit: index = sum_k digit_k * prod_{j>k} d_j.
class SystemShape {
public:
    explicit SystemShape(std::vector<int> dims);

    int subsystem_count() const { return static_cast<int>(dims_.size()); }
    int local_dim(int position) const { return dims_[position]; }  // 0-based
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const { return total_dim_; }
    // stride of the digit at `position`: product of the dimensions after it
    long long stride(int position) const { return strides_[position]; }

    bool homogeneous() const;

    bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }

private:
    std::vector<int> dims_;
    std::vector<long long> strides_;
    int total_dim_ = 0;
};

// Nonempty subset of the subsystems of a SystemShape; bit i of the mask
// corresponds to subsystem i+1. Cuts additionally require a PROPER subset,
// enforced by require_proper() at every cut-consuming operation; the full
// region is admitted so correlation tensors can span the whole system.
class SubsetMask {
public:
    SubsetMask(std::uint32_t bits, SystemShape shape);

    std::uint32_t bits() const { return bits_; }
    const SystemShape& shape() const { return shape_; }

    int size() const;                 // popcount
    bool is_proper() const;           // size() < N
    void require_proper(const char* operation) const;
    bool contains(int position) const { return (bits_ >> position) & 1u; }

    std::vector<int> members() const;     // ascending 0-based positions
    SubsetMask complement() const;        // defined for proper subsets only

    long long dim() const;                // product of member dimensions
    long long complement_dim() const;

    // "{1,3}" with 1-based subsystem labels
    std::string label() const;
    // "{1}|{2,3}"
    std::string cut_label() const;

private:
    std::uint32_t bits_ = 0;
    SystemShape shape_;
};

// All proper nonempty subsets in ascending bitmask order (1 .. 2^N - 2).
std::vector<SubsetMask> all_cuts(const SystemShape& shape);

} // namespace gmecert
