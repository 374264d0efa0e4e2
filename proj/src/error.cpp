#include "modlp/error.hpp"

namespace modlp {

const char* errc_name(errc code) {
  switch (code) {
    case errc::overlapping_signature: return "OverlappingSignature";
    case errc::foreign_atom: return "ForeignAtom";
    case errc::input_only_head: return "InputOnlyHead";
    case errc::reserved_atom: return "ReservedAtom";
    case errc::out_of_signature: return "OutOfSignature";
    case errc::name_clash: return "NameClash";
    case errc::syntax_error: return "SyntaxError";
    case errc::undeclared_atom: return "UndeclaredAtom";
    case errc::signature_too_large: return "SignatureTooLarge";
    case errc::component_too_large: return "ComponentTooLarge";
    case errc::not_an_input: return "NotAnInput";
    case errc::not_defined_here: return "NotDefinedHere";
    case errc::not_a_loop: return "NotALoop";
    case errc::interface_violation: return "InterfaceViolation";
    case errc::mutual_dependence: return "MutualDependence";
    case errc::not_hidden: return "NotHidden";
    case errc::not_output: return "NotOutput";
    case errc::not_ordinary: return "NotOrdinary";
    case errc::not_a_splitting_set: return "NotASplittingSet";
    case errc::incompatible: return "Incompatible";
    case errc::no_eva: return "NoEva";
    case errc::block_violation: return "BlockViolation";
    case errc::unused_variable: return "UnusedVariable";
    case errc::usage: return "Usage";
  }
  return "Unknown";
}

error::error(errc code, std::string detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

void fail(errc code, std::string detail) { throw error(code, std::move(detail)); }

}  // namespace modlp
