#pragma once

// Text literals for morphisms and (co)spans:
//   fn 3 -> 2 : [0,1,1]
//   par 2 -> 2 : [_,0]
//   mat q 2x3 : [[1,0,2],[0,1,-1]]
//   cospan { left = <morphism>, right = <morphism> }     (span likewise)

#include <string>
#include <string_view>

#include "corelate/ambient.hpp"

namespace corelate {

FinMap parse_fin_map(std::string_view text);
ParMap parse_par_map(std::string_view text);
ExactMatrix parse_matrix(std::string_view text);

Cospan<FinMap> parse_fin_cospan(std::string_view text);
Span<FinMap> parse_fin_span(std::string_view text);
Cospan<ParMap> parse_par_cospan(std::string_view text);
Span<ParMap> parse_par_span(std::string_view text);
Cospan<ExactMatrix> parse_matrix_cospan(std::string_view text);
Span<ExactMatrix> parse_matrix_span(std::string_view text);

inline FinMap parse_morphism(const FinAmbient&, std::string_view t) { return parse_fin_map(t); }
inline ParMap parse_morphism(const ParAmbient&, std::string_view t) { return parse_par_map(t); }
/// RingMismatch when the literal's ring differs from the ambient's.
ExactMatrix parse_morphism(const MatrixAmbient& amb, std::string_view t);

inline Cospan<FinMap> parse_cospan(const FinAmbient&, std::string_view t) { return parse_fin_cospan(t); }
inline Cospan<ParMap> parse_cospan(const ParAmbient&, std::string_view t) { return parse_par_cospan(t); }
Cospan<ExactMatrix> parse_cospan(const MatrixAmbient& amb, std::string_view t);
inline Span<FinMap> parse_span(const FinAmbient&, std::string_view t) { return parse_fin_span(t); }
inline Span<ParMap> parse_span(const ParAmbient&, std::string_view t) { return parse_par_span(t); }
Span<ExactMatrix> parse_span(const MatrixAmbient& amb, std::string_view t);

}  // namespace corelate
