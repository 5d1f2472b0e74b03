#include "shops/errors.hpp"

namespace shops {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_input: return "invalid_input";
    case Errc::not_square: return "not_square";
    case Errc::not_hermitian: return "not_hermitian";
    case Errc::not_psd: return "not_psd";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::no_a_adjoint: return "no_a_adjoint";
    case Errc::not_a_bounded: return "not_a_bounded";
    case Errc::a_null_operator: return "a_null_operator";
    case Errc::rank_out_of_range: return "rank_out_of_range";
    case Errc::unknown_theorem: return "unknown_theorem";
    case Errc::missing_component: return "missing_component";
    case Errc::bad_file: return "bad_file";
  }
  return "unknown";
}

}  // namespace shops
