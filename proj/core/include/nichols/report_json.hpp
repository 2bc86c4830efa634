#pragma once

#include <string>

#include "nichols/analyzer.hpp"

namespace nichols {

// Scalar serialization used inside the reports:
//   {"kind": "cyclotomic", "order": N, "coeffs": ["1", "-2/3", ...]}
//   {"kind": "rational_function", "num": ["-1","0","1"], "den": ["1"]}
std::string to_json_string(const ExactScalar& x);

// {"degree_bound": D, "verdict": "free-up-to-D" | "not-free",
//  "witnesses": [[3,4],...], "values": [{"m": [0,2], "P": <scalar>}, ...]}
std::string to_json_string(const FreenessReport& report);

// {"m": [3,4], "d": 1, "d_prime": 6, "n1": 7, "n2": 5,
//  "kernel_dim_formula": 2, "kernel_dim_bruteforce": 2, "relation_dim": 2}
// (the optional fields are omitted when not computed)
std::string to_json_string(const KernelReport& report);

}  // namespace nichols
