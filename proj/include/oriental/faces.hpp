#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "oriental/cube.hpp"

namespace oriental {

enum class Side { Source, Target };

const char* to_string(Side s);

std::uint64_t binom(std::size_t n, std::size_t k);

/// An ordered source/target k-face list: psi_k[n] or omega_k[n].
/// Order is the literal recursion order; it is part of the contract.
struct FaceList {
    Side side = Side::Source;
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<CubeWord> words;

    std::set<CubeWord> word_set() const { return {words.begin(), words.end()}; }
};

/// psi_k[n]: base psi_0[n] = [-...-], psi_k[n] = [0...0] for k >= n,
/// otherwise mu psi_{k-1}[n-1] followed by (k even) lambda psi_k[n-1]
/// or (k odd) nu psi_k[n-1]. Memoized; results are shared and immutable.
const std::vector<CubeWord>& psi(std::size_t k, std::size_t n);

/// omega_k[n]: base [+...+], clamp [0...0], recursion
/// (k even) nu omega_k[n-1] then mu omega_{k-1}[n-1];
/// (k odd) lambda omega_k[n-1] then mu omega_{k-1}[n-1].
const std::vector<CubeWord>& omega(std::size_t k, std::size_t n);

FaceList face_list(Side side, std::size_t k, std::size_t n);

/// True iff the words are exactly one representative of each parallel
/// class with k zeros in ambient n.
bool is_section(const std::set<CubeWord>& words, std::size_t k, std::size_t n);

/// Outcome of disk certification for a set of k-cells:
/// (a) each (k-1)-cell meets at most two of them, (b) the dual adjacency
/// graph is connected, (c) the generated complex collapses to a point,
/// (d) boundary = (k-1)-cells of incidence exactly one.
struct DiskCertificate {
    bool ok = false;
    std::string failure;          // which condition failed, and where
    std::set<CubeWord> boundary;  // meaningful when ok
};

DiskCertificate certify_disk(const std::set<CubeWord>& cells, std::size_t k); // throws EmptyInput

/// All faces of all dimensions of the given cells, the cells included.
std::set<CubeWord> closure(const std::set<CubeWord>& cells);

} // namespace oriental
