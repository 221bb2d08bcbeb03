#pragma once

#include <string>

#include "c3m/complexity.hpp"

namespace c3m {

// Parses the descriptor grammar used by every printing routine:
//
//   descriptor := "s3" | "rp3"
//               | "lens(" int "," int ")"
//               | "sfs(" base ";" fibres ";" int ")"
//               | "tb" "[[" int "," int "],[" int "," int "]]"
//               | "chain(" slope "," slope "," slope ")"
//   base       := "S2" | "P2" | "T2" | "K2"
//   fibres     := empty | pair { "," pair }       with pair := "(" int "," int ")"
//   slope      := "inf" | int [ "/" int ]
//
// Whitespace between tokens is ignored.  The result goes through the same
// constructors the census uses, so parse_descriptor(descriptor_to_string(d))
// == d for every descriptor the library prints.  Syntax problems throw
// parse_error naming a 1-based character position; input that parses but
// is mathematically invalid (a non-coprime pair, a monodromy of determinant
// != 1) throws domain_error.
ManifoldDescriptor parse_descriptor(const std::string& text);

}  // namespace c3m
