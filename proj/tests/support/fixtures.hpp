#pragma once

#include <string>

#include "cqda/circuit.hpp"
#include "cqda/query.hpp"
#include "cqda/relations.hpp"

namespace cqda::testing {

std::string data_path(std::string const& relative);

/// Q = !S(x1,x2,x3,x4), T(x1,x3), R(x2,x4) over {0,1}.
SignedQuery example51_query();
Database example51_db();

/// Ordered circuit over x1, x2, x3 with domain {0,1,2}: the root tests x1
/// and leads to a gate with nrel [2,4], a gate with nrel [2,4,6] and a
/// product; the shared x3 gate below has nrel [1,2,2].
Circuit annotated_circuit();
/// Gate ids inside annotated_circuit().
struct AnnotatedGates {
    GateId x3_shared;
    GateId x2_left;
    GateId x2_middle;
    GateId x2_product;
    GateId x3_product;
    GateId product;
    GateId root;
};
AnnotatedGates annotated_gates();

/// A(x1), B(x2), !R(x1,x2) on domain {0,1,2,3}.
SignedQuery binarize_example_query();
Database binarize_example_db();

/// A(x1), B(x2), !R(x1,x2) with A = B = D and R the identity on D = {0..d-1}.
SignedQuery inequality_query();
Database inequality_db(std::size_t d);

}  // namespace cqda::testing
