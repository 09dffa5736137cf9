#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "herencode/class_spec.hpp"
#include "herencode/graph.hpp"
#include "herencode/labeling.hpp"

namespace herencode {

// Parameters of a registered class; unused ones stay 0.
struct ClassParams {
  int p = 0;
  int s = 0;
  int k = 0;

  friend bool operator==(const ClassParams&, const ClassParams&) = default;
};

// Registered class ids, in a stable order.
const std::vector<std::string>& class_ids();
// Throws std::invalid_argument for an unknown id or missing/invalid params.
ClassSpec class_spec_for(const std::string& class_id, const ClassParams& params);

// ---- errors ----------------------------------------------------------------

class ClaimViolatedError : public std::runtime_error {
 public:
  ClaimViolatedError(std::string class_id, std::string claim, std::vector<Vertex> witness);
  const std::string& class_id() const { return class_id_; }
  const std::string& claim() const { return claim_; }
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  std::string class_id_;
  std::string claim_;
  std::vector<Vertex> witness_;
};

class PreconditionMissingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotBipartiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- biclique partition ----------------------------------------------------

// A0/B0: parts of the maximal extension of the least K_{p^2,p^2} (A0 in the
// top part). A1p: outside A0, a neighbour and at most p-1 non-neighbours in
// B0; A1pp: a neighbour and at least p non-neighbours; A2: no neighbour in B0.
// Likewise for B against A0. Sets are indices of g.
struct BicliquePartition {
  VertexSet A0, A1p, A1pp, A2;
  VertexSet B0, B1p, B1pp, B2;
};

// Throws PreconditionMissingError when g has no K_{p^2,p^2}.
BicliquePartition biclique_partition(const BipartiteGraph& g, int p);

// ---- certificates ----------------------------------------------------------
//
// Vertices are named by the labels of the graph the certificate was made for.

struct Certificate;

enum class DegreeMeasure { Degree, CoDegree, BipartiteCoDegree };

// Every listed vertex has measure <= bound.
struct LowDegree {
  std::vector<Vertex> vertices;
  unsigned bound = 0;
  DegreeMeasure measure = DegreeMeasure::Degree;
};

struct Delta {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> delta;  // N(x) xor N(y), ascending
  unsigned bound = 0;         // stated bound of the class
  unsigned achieved = 0;      // |delta|
  bool same_part = false;
};

enum class PartCheck {
  Complete,        // complete bipartite between its two sides
  CoDegreeAtMost,  // at most `bound` non-neighbours in the opposite side
  InClass,         // in_class(part, spec)
};

struct PartTag {
  std::string name;
  PartCheck check = PartCheck::InClass;
  unsigned bound = 0;
  ClassSpec spec;
  // InClass parts with a scheme constructor (observed bipartite degeneracy).
  bool implicit = false;
};

// Induced subgraph of the host on `vertices`. `inner` holds at most one
// certificate for that subgraph.
struct Piece {
  std::vector<Vertex> vertices;
  std::optional<PartTag> tag;
  std::vector<Certificate> inner;
};

struct Cover {
  std::vector<Piece> parts;
  unsigned multiplicity = 0;
};

// Each layer's vertices have at most d neighbours or at most d non-neighbours
// (opposite part only) in the later layers.
struct Peel {
  std::vector<Piece> layers;
  unsigned d = 0;
};

struct Reduce {
  std::string target_id;  // empty when the target is not a registered class
  ClassParams target_params;
  ClassSpec target;
  bool on_bipartite_complement = false;
  std::vector<Certificate> inner;
};

// One piece per connected component, each with its own certificate.
struct Components {
  std::vector<Piece> parts;
};

// One piece per prime node of the modular decomposition (its representatives,
// the least vertex of each child), in pre-order.
struct Quotient {
  std::vector<Piece> parts;
};

struct Certificate {
  std::string class_id;
  ClassParams params;
  std::vector<std::string> claims_checked;
  std::variant<LowDegree, Delta, Cover, Peel, Reduce, Components, Quotient> body;
};

std::string certificate_kind(const Certificate& c);

// Throws NotBipartiteError, NotInClassError (unless check_membership is
// false), ClaimViolatedError, PreconditionMissingError, ResourceError.
Certificate find_certificate(const BipartiteGraph& g, const std::string& class_id, const ClassParams& params,
                             bool check_membership = true);
Certificate find_certificate(const Graph& g, const std::string& class_id, const ClassParams& params,
                             bool check_membership = true);

struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

Verdict verify_certificate(const BipartiteGraph& g, const Certificate& cert);

// Stated Delta bound of a class, if it has one.
std::optional<unsigned> stated_delta_bound(const std::string& class_id, const ClassParams& params);

// Certificates whose proof only yields a counting bound.
struct SuccinctPlan {
  std::string reason;
};

// Throws CertificateInvalidError if the certificate does not verify.
std::variant<LabelingScheme, SuccinctPlan> certificate_to_scheme(const BipartiteGraph& g, const Certificate& cert);

// {"kind":...,"class":...,"params":{...},"claims_checked":[...], ...}
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(std::string_view text);

}  // namespace herencode
