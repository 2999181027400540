#pragma once

#include "ehzkit/ecp.hpp"
#include "ehzkit/mdsgen.hpp"

namespace ehzkit {

/// JSON text (stable key order) for the file formats the CLI reads and
/// writes. Element rendering follows the given mode; parsing accepts any of
/// the element grammars regardless of mode.

std::string field_to_json(const Field& f);
FieldPtr field_from_json(const std::string& text);

std::string matrix_to_json(const FqMatrix& m, ElemFormat mode);
FqMatrix matrix_from_json(const std::string& text, FieldPtr f);

std::string descriptor_to_json(const CodeDescriptor& code, ElemFormat mode);
CodeDescriptor descriptor_from_json(const std::string& text);

std::string pair_to_json(const EcpPair& pair, const Field& f, ElemFormat mode);
EcpPair pair_from_json(const std::string& text, FieldPtr f);

std::string query_to_json(const DeepHoleQuery& q, const Field& f, ElemFormat mode);
DeepHoleQuery query_from_json(const std::string& text, FieldPtr f);

std::string certificate_to_json(const ExtensionCertificate& cert, ElemFormat mode);

/// FNV-1a over the canonical (int-format) descriptor JSON; provenance key
/// for certificate streams.
std::string descriptor_hash(const CodeDescriptor& code);

}  // namespace ehzkit
