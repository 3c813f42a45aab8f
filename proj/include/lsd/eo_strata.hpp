#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsd/kottwitz.hpp"

namespace lsd {

struct EOContext {
    const RootDatum* rd = nullptr;
    IVec mu;
    unsigned J = 0;  // simple roots with <alpha_i, mu> = 0
    bool orthogonal = false;
    int m = 0;       // rank of the orthogonal part
    bool odd = false;
};
EOContext make_eo_context(const RootDatum& rd, const IVec& mu);

struct CosetRep {
    std::vector<int> word;  // 0-based simple reflections, w = s_{word[0]} s_{word[1]} ...
    int length = 0;
    std::string label;
    IVec lambda;  // w^{-1} mu, identifies the coset
};

// Minimal length representatives of W_J \ W, sorted by (length, label).
std::vector<CosetRep> enumerate_jw(const EOContext& ctx);

// Bruhat order on W via the descent recursion u <= w iff min(u, us) <= ws.
bool bruhat_leq(const RootDatum& rd, const std::vector<int>& u, const std::vector<int>& w);
// Cover relations (i, j) with reps[i] < reps[j] and lengths differing by one.
std::vector<std::pair<int, int>> bruhat_covers(const RootDatum& rd, const std::vector<CosetRep>& reps);

bool is_reduced(const RootDatum& rd, const std::vector<int>& word);
// Exhaustive scan of the coset W_J w.
bool is_min_coset_rep(const RootDatum& rd, unsigned J, const std::vector<int>& word);
bool same_element(const RootDatum& rd, const std::vector<int>& a, const std::vector<int>& b);

// Quadratic space of dimension n + 2; Hasse invariant of the twisted space is -1.
struct QuadSpaceData {
    int n = 1;
    bool det_plus = true;  // det V = (-1)^{n/2}; ignored for odd n
    int hasse = -1;
};
int tmax(const QuadSpaceData& q);
std::vector<int> vertex_types(const QuadSpaceData& q);

// Explicit words for the orthogonal context, keyed by label; letters are 0-based.
std::map<std::string, std::vector<int>> orthogonal_words(const EOContext& ctx);

// Labels of ^JW^b for the class at index `cls` of the table. Throws std::invalid_argument
// if the datum is not fully HN-decomposable or the context is not orthogonal.
std::vector<std::string> jw_b_subset(const EOContext& ctx, const QuadSpaceData& q, const BGMu& table, int cls);

struct HPEntry {
    std::vector<std::string> labels;  // one label, or the pair m-1, m-1'
    int type = 0;
};
std::vector<HPEntry> eo_hp_correspondence(const EOContext& ctx, const QuadSpaceData& q);
// Type of a single basic label; throws std::out_of_range outside ^JW^b.
int hp_type(const EOContext& ctx, const QuadSpaceData& q, const std::string& label);

struct K3NewtonRow {
    std::optional<int> height;  // nullopt for the supersingular class
    std::vector<std::pair<Q, int>> slopes;  // slope, multiplicity
    int class_index = 0;
    long long dim = 0;
};
struct K3EORow {
    int index = 0;  // 1..20
    std::string label;
    int length = 0;
    std::optional<int> height;  // for the non-basic indices
    std::optional<int> artin;   // for the basic indices
    std::optional<int> vertex_type;
};
struct K3Dictionary {
    std::vector<K3NewtonRow> newton;
    std::vector<K3EORow> eo;
};
// Assembled from the generic machinery; throws std::logic_error on any mismatch.
K3Dictionary k3_dictionary();

}  // namespace lsd
