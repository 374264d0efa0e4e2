#pragma once

#include <stdexcept>
#include <string>

namespace modlp {

enum class errc {
  overlapping_signature,
  foreign_atom,
  input_only_head,
  reserved_atom,
  out_of_signature,
  name_clash,
  syntax_error,
  undeclared_atom,
  signature_too_large,
  component_too_large,
  not_an_input,
  not_defined_here,
  not_a_loop,
  interface_violation,
  mutual_dependence,
  not_hidden,
  not_output,
  not_ordinary,
  not_a_splitting_set,
  incompatible,
  no_eva,
  block_violation,
  unused_variable,
  usage,
};

const char* errc_name(errc code);

// All failing operations throw this; what() is "<Kind>: <detail>" where
// <Kind> is the stable machine-readable name from errc_name().
class error : public std::runtime_error {
 public:
  error(errc code, std::string detail);
  errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  errc code_;
  std::string detail_;
};

[[noreturn]] void fail(errc code, std::string detail);

}  // namespace modlp
