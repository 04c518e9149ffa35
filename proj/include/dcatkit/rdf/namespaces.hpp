#pragma once

#include <string_view>

namespace dcatkit::ns {

inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view dcat = "http://www.w3.org/ns/dcat#";
inline constexpr std::string_view dcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view foaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view prov = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view odrl = "http://www.w3.org/ns/odrl/2/";
inline constexpr std::string_view adms = "http://www.w3.org/ns/adms#";
inline constexpr std::string_view skos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view dqv = "http://www.w3.org/ns/dqv#";
inline constexpr std::string_view locn = "http://www.w3.org/ns/locn#";
inline constexpr std::string_view time = "http://www.w3.org/2006/time#";
inline constexpr std::string_view geosparql = "http://www.opengis.net/ont/geosparql#";
inline constexpr std::string_view vcard = "http://www.w3.org/2006/vcard/ns#";
inline constexpr std::string_view sdo = "http://schema.org/";

inline constexpr std::string_view iana_media_types = "https://www.iana.org/assignments/media-types/";

}  // namespace dcatkit::ns
