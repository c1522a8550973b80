#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hcob/equivariant.hpp"
#include "hcob/intmatrix.hpp"
#include "hcob/involutive.hpp"
#include "hcob/simplicial.hpp"

namespace hcob {

struct InvolutiveInput {
  UComplex complex;
  std::optional<F2Matrix> iota;
  bool operator==(const InvolutiveInput&) const = default;
};

struct SeifertInput {
  IntMatrix matrix;
  bool operator==(const SeifertInput&) const = default;
};

using InputValue = std::variant<AbstractComplex, PinModel, SOneModel, InvolutiveInput, SeifertInput>;

// "simplicial", "pin_model", "s1_model", "u_complex" or "seifert".
std::string kind_of(const InputValue& v);

// Schema errors are InputError. A placeholder record (kind "placeholder")
// raises ModelInvalid carrying its stated reason.
InputValue parse_input(std::string_view json_text);
// Canonical JSON text, two-space indent, trailing newline.
std::string serialize(const InputValue& v);

struct LoadedInput {
  std::string ref;   // path or fixtures:<name>
  std::string text;  // raw bytes
  InputValue value;
};

// Reads a file, or a bundled fixture when ref is "fixtures:<name>".
LoadedInput load_input(const std::string& ref);

struct FixtureInfo {
  std::string name;
  std::string kind;
  std::string text;
};

std::vector<FixtureInfo> fixtures();
std::optional<FixtureInfo> find_fixture(std::string_view name);

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace hcob
