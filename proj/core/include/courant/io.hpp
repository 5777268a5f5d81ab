#ifndef COURANT_IO_HPP
#define COURANT_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "courant/algebra.hpp"
#include "courant/check_report.hpp"
#include "courant/constructions.hpp"
#include "courant/ecourant.hpp"
#include "courant/gcs.hpp"

namespace courant {

enum class DocKind {
  lie_algebra,
  leibniz,
  representation,
  crossed_module,
  lie2,
  ecourant,
  gcs,
  omni_gcs,
  subspace,
  endomorphism,
};

std::string kind_name(DocKind k);
DocKind parse_kind(const std::string& name);  ///< throws InputError

enum class ReportFormat { json, text };

/// One JSON document: a kind, a scalar field, named dimensions, and named
/// tensors as flat row-major arrays of scalar strings. The set of dims and
/// tensors (with their extents) is fixed per kind; parse_document validates
/// it and rejects non-canonical scalars with the offending path.
struct StructureDocument {
  DocKind kind = DocKind::lie_algebra;
  Field scalar_field = Field::rational;
  std::map<std::string, std::size_t> dims;
  std::map<std::string, std::vector<Scalar>> tensors;

  friend bool operator==(const StructureDocument& a,
                         const StructureDocument& b) {
    return a.kind == b.kind && a.scalar_field == b.scalar_field &&
           a.dims == b.dims && a.tensors == b.tensors;
  }
};

/// Parses and validates; throws InputError with the first offending path.
StructureDocument parse_document(const std::string& text);

/// Canonical serialization: sorted keys, two-space indentation, scalars in
/// canonical text form, trailing newline. parse_document of the output
/// returns the identical document.
std::string serialize(const StructureDocument& doc);

// Typed extraction (throws InputError on kind mismatch).
LieAlgebra to_lie_algebra(const StructureDocument& doc);
LeibnizAlgebra to_leibniz(const StructureDocument& doc);
Representation to_representation(const StructureDocument& doc);
Endomorphism to_endomorphism(const StructureDocument& doc);
CrossedModule to_crossed_module(const StructureDocument& doc);
LieTwoAlgebra to_lie_two(const StructureDocument& doc);
ECourantStructure to_ecourant(const StructureDocument& doc);  ///< ecourant or gcs
Matrix gcs_j(const StructureDocument& doc);                   ///< gcs only
OmniGcsData to_omni_gcs(const StructureDocument& doc);
Subspace to_subspace(const StructureDocument& doc);

// Document construction.
StructureDocument document_of(const LieAlgebra& l);
StructureDocument document_of(const LeibnizAlgebra& l);
StructureDocument document_of(const Representation& r);
StructureDocument document_of(const Endomorphism& e);
StructureDocument document_of(const CrossedModule& cm);
StructureDocument document_of(const LieTwoAlgebra& t);
StructureDocument document_of(const ECourantStructure& c);
StructureDocument document_of_gcs(const ECourantStructure& c, const Matrix& j);
StructureDocument document_of_omni_gcs(std::size_t n, const OmniGcsData& d);
StructureDocument document_of_subspace(const Subspace& s, Field field);

/// FNV-1a 64-bit digest of the raw input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(const std::string& bytes);

/// Canonical report rendering. The JSON form has sorted keys and no
/// volatile fields, so identical inputs give byte-identical reports.
std::string render_report(const CheckReport& report, const std::string& digest,
                          ReportFormat format);

/// Named tensor presets for the CLI (`zero`, `aff1`, `rot2`, `ad`, `det3`).
Tensor3 pi_preset(const std::string& name, std::size_t n);
Matrix d_preset(const std::string& name, std::size_t n);
Tensor4 l3_preset(const std::string& name, std::size_t n0, std::size_t n1);
Tensor3 action_preset(const std::string& name, const LieAlgebra& g,
                      std::size_t module_dim);

} // namespace courant

#endif
