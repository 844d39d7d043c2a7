#pragma once

#include <string>

#include "opetope/complex.hpp"
#include "opetope/network.hpp"

namespace opetope {

// Both document kinds are JSON. Serialization is canonical: records and
// lists in natural id order, one basis record or network per line.

struct ComplexDocument {
  std::string name;
  Complex complex;
};

struct SequenceDocument {
  std::string name;
  OpetopicSequence sequence;
};

ComplexDocument parse_complex(const std::string& text);
std::string serialize_complex(const Complex& k, const std::string& name = "");

SequenceDocument parse_sequence(const std::string& text);
std::string serialize_sequence(const OpetopicSequence& seq, const std::string& name = "");

enum class DocumentKind { complex, sequence };

// Decides by the top-level keys ("basis" or "networks").
DocumentKind detect_document(const std::string& text);

std::string to_dot(const OpetopicSequence& seq, const std::string& name = "opetope");
std::string to_dot(const Network& n, const std::string& name = "network");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace opetope
