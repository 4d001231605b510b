#include "gmecert/ops.hpp"

#include "gmecert/errors.hpp"

namespace gmecert {

namespace {

void check_operator_shape(const ComplexMatrix& rho, const SystemShape& shape,
                          const char* operation) {
    if (rho.rows() != shape.total_dim() || rho.cols() != shape.total_dim()) {
        throw shape_error(std::string(operation) +
                          ": operator dimensions do not match the system shape");
    }
}

} // namespace

std::vector<long long> subsystem_offsets(const SystemShape& shape,
                                         const std::vector<int>& positions) {
    long long count = 1;
    for (int p : positions) count *= shape.local_dim(p);
    std::vector<long long> offsets(static_cast<std::size_t>(count), 0);
    long long block = 1;  // number of offsets already filled per digit cycle
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
        const int d = shape.local_dim(*it);
        const long long stride = shape.stride(*it);
        for (long long v = block; v < block * d; ++v) {
            const long long digit = v / block;
            offsets[v] = offsets[v % block] + digit * stride;
        }
        block *= d;
    }
    return offsets;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const long long rows = static_cast<long long>(a.rows()) * b.rows();
    const long long cols = static_cast<long long>(a.cols()) * b.cols();
    if (rows > dimension_cap() || cols > dimension_cap()) {
        throw size_error("kron: result dimension exceeds the configured cap");
    }
    ComplexMatrix out(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (int k = 0; k < b.rows(); ++k) {
                for (int l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SystemShape& shape,
                            const SubsetMask& keep) {
    check_operator_shape(rho, shape, "partial_trace");

    const auto kept = keep.members();
    std::vector<int> comp;
    for (int i = 0; i < shape.subsystem_count(); ++i) {
        if (!keep.contains(i)) comp.push_back(i);
    }
    const auto keep_offsets = subsystem_offsets(shape, kept);
    const auto comp_offsets = subsystem_offsets(shape, comp);

    const int dk = static_cast<int>(keep_offsets.size());
    ComplexMatrix out(dk, dk);
    for (int a = 0; a < dk; ++a) {
        for (int b = 0; b < dk; ++b) {
            cplx sum{0.0, 0.0};
            for (long long e : comp_offsets) {
                sum += rho(static_cast<int>(keep_offsets[a] + e),
                           static_cast<int>(keep_offsets[b] + e));
            }
            out(a, b) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SystemShape& shape,
                                const SubsetMask& part) {
    check_operator_shape(rho, shape, "partial_transpose");

    const int total = shape.total_dim();
    // part_component[i] = contribution of the digits inside `part` to index i
    std::vector<long long> part_component(static_cast<std::size_t>(total), 0);
    for (int i = 0; i < total; ++i) {
        long long rem = i;
        long long inside = 0;
        for (int k = 0; k < shape.subsystem_count(); ++k) {
            const long long digit = rem / shape.stride(k);
            rem -= digit * shape.stride(k);
            if (part.contains(k)) inside += digit * shape.stride(k);
        }
        part_component[i] = inside;
    }

    ComplexMatrix out(total, total);
    for (int i = 0; i < total; ++i) {
        const long long rest_i = i - part_component[i];
        for (int j = 0; j < total; ++j) {
            const long long rest_j = j - part_component[j];
            out(static_cast<int>(rest_i + part_component[j]),
                static_cast<int>(rest_j + part_component[i])) = rho(i, j);
        }
    }
    return out;
}

ComplexMatrix realign(const ComplexMatrix& rho, const SystemShape& bipartite_shape) {
    if (bipartite_shape.subsystem_count() != 2) {
        throw shape_error("realign: a bipartite shape (two subsystems) is required");
    }
    check_operator_shape(rho, bipartite_shape, "realign");

    const int da = bipartite_shape.local_dim(0);
    const int db = bipartite_shape.local_dim(1);
    ComplexMatrix out(da * da, db * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            for (int k = 0; k < db; ++k) {
                for (int l = 0; l < db; ++l) {
                    out(i * da + j, k * db + l) = rho(i * db + k, j * db + l);
                }
            }
        }
    }
    return out;
}

BipartiteCut as_bipartite(const ComplexMatrix& rho, const SystemShape& shape,
                          const SubsetMask& cut) {
    check_operator_shape(rho, shape, "as_bipartite");
    cut.require_proper("as_bipartite");

    const int total = shape.total_dim();
    const long long dc = cut.complement_dim();

    // relabel: new index = (cut digits, complement digits), each group keeping
    // its original subsystem order
    std::vector<int> relabel(static_cast<std::size_t>(total), 0);
    for (int i = 0; i < total; ++i) {
        long long rem = i;
        long long cut_value = 0;
        long long comp_value = 0;
        for (int k = 0; k < shape.subsystem_count(); ++k) {
            const long long digit = rem / shape.stride(k);
            rem -= digit * shape.stride(k);
            if (cut.contains(k)) {
                cut_value = cut_value * shape.local_dim(k) + digit;
            } else {
                comp_value = comp_value * shape.local_dim(k) + digit;
            }
        }
        relabel[i] = static_cast<int>(cut_value * dc + comp_value);
    }

    ComplexMatrix out(total, total);
    for (int i = 0; i < total; ++i) {
        for (int j = 0; j < total; ++j) {
            out(relabel[i], relabel[j]) = rho(i, j);
        }
    }
    return BipartiteCut{std::move(out),
                        SystemShape({static_cast<int>(cut.dim()), static_cast<int>(dc)})};
}

} // namespace gmecert
