#include "dcatkit/error.hpp"

namespace dcatkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::DatatypeLanguageClash: return "DatatypeLanguageClash";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BaseRequired: return "BaseRequired";
    case ErrorCode::UnmappedTerm: return "UnmappedTerm";
    case ErrorCode::CorruptVocabularyFile: return "CorruptVocabularyFile";
    case ErrorCode::CorruptDataFile: return "CorruptDataFile";
    case ErrorCode::NotACatalogedResource: return "NotACatalogedResource";
    case ErrorCode::InvalidDuration: return "InvalidDuration";
    case ErrorCode::EmptyPeriod: return "EmptyPeriod";
    case ErrorCode::UnknownRuleId: return "UnknownRuleId";
    case ErrorCode::RootNotExportable: return "RootNotExportable";
    case ErrorCode::NotADataset: return "NotADataset";
  }
  return "Unknown";
}

}  // namespace dcatkit
