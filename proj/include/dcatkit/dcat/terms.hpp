#pragma once

// IRI constants for the vocabularies the model, validator and crosswalk read.

#include "dcatkit/rdf/namespaces.hpp"
#include "dcatkit/rdf/term.hpp"

namespace dcatkit::terms {

#define DCATKIT_TERM(ns_, name) inline const rdf::Term name = rdf::iri(ns::ns_, #name)

namespace rdf_ {
DCATKIT_TERM(rdf, type);
DCATKIT_TERM(rdf, first);
DCATKIT_TERM(rdf, rest);
DCATKIT_TERM(rdf, nil);
DCATKIT_TERM(rdf, Property);
}  // namespace rdf_

namespace rdfs {
DCATKIT_TERM(rdfs, Class);
DCATKIT_TERM(rdfs, subClassOf);
DCATKIT_TERM(rdfs, subPropertyOf);
DCATKIT_TERM(rdfs, comment);
DCATKIT_TERM(rdfs, label);
}  // namespace rdfs

namespace dcat {
DCATKIT_TERM(dcat, Catalog);
DCATKIT_TERM(dcat, CatalogRecord);
DCATKIT_TERM(dcat, Dataset);
DCATKIT_TERM(dcat, DataService);
DCATKIT_TERM(dcat, Distribution);
DCATKIT_TERM(dcat, Resource);
DCATKIT_TERM(dcat, Relationship);
DCATKIT_TERM(dcat, Role);
DCATKIT_TERM(dcat, accessService);
DCATKIT_TERM(dcat, accessURL);
DCATKIT_TERM(dcat, bbox);
DCATKIT_TERM(dcat, byteSize);
DCATKIT_TERM(dcat, catalog);
DCATKIT_TERM(dcat, centroid);
DCATKIT_TERM(dcat, compressFormat);
DCATKIT_TERM(dcat, contactPoint);
DCATKIT_TERM(dcat, dataset);
DCATKIT_TERM(dcat, distribution);
DCATKIT_TERM(dcat, downloadURL);
DCATKIT_TERM(dcat, endDate);
DCATKIT_TERM(dcat, endpointDescription);
DCATKIT_TERM(dcat, endpointURL);
DCATKIT_TERM(dcat, hadRole);
DCATKIT_TERM(dcat, keyword);
DCATKIT_TERM(dcat, landingPage);
DCATKIT_TERM(dcat, mediaType);
DCATKIT_TERM(dcat, packageFormat);
DCATKIT_TERM(dcat, qualifiedRelation);
DCATKIT_TERM(dcat, record);
DCATKIT_TERM(dcat, servesDataset);
DCATKIT_TERM(dcat, service);
DCATKIT_TERM(dcat, spatialResolutionInMeters);
DCATKIT_TERM(dcat, startDate);
DCATKIT_TERM(dcat, temporalResolution);
DCATKIT_TERM(dcat, theme);
DCATKIT_TERM(dcat, themeTaxonomy);
}  // namespace dcat

namespace dcterms {
DCATKIT_TERM(dcterms, PeriodOfTime);
DCATKIT_TERM(dcterms, Location);
DCATKIT_TERM(dcterms, accessRights);
DCATKIT_TERM(dcterms, conformsTo);
DCATKIT_TERM(dcterms, creator);
DCATKIT_TERM(dcterms, description);
DCATKIT_TERM(dcterms, format);
DCATKIT_TERM(dcterms, hasPart);
DCATKIT_TERM(dcterms, identifier);
DCATKIT_TERM(dcterms, isReferencedBy);
DCATKIT_TERM(dcterms, issued);
DCATKIT_TERM(dcterms, language);
DCATKIT_TERM(dcterms, license);
DCATKIT_TERM(dcterms, modified);
DCATKIT_TERM(dcterms, publisher);
DCATKIT_TERM(dcterms, relation);
DCATKIT_TERM(dcterms, rights);
DCATKIT_TERM(dcterms, spatial);
DCATKIT_TERM(dcterms, temporal);
DCATKIT_TERM(dcterms, title);
DCATKIT_TERM(dcterms, type);
}  // namespace dcterms

namespace foaf {
DCATKIT_TERM(foaf, Agent);
DCATKIT_TERM(foaf, homepage);
DCATKIT_TERM(foaf, name);
DCATKIT_TERM(foaf, primaryTopic);
}  // namespace foaf

namespace prov {
DCATKIT_TERM(prov, Attribution);
DCATKIT_TERM(prov, agent);
DCATKIT_TERM(prov, qualifiedAttribution);
DCATKIT_TERM(prov, wasGeneratedBy);
}  // namespace prov

namespace odrl {
DCATKIT_TERM(odrl, hasPolicy);
}  // namespace odrl

namespace adms {
DCATKIT_TERM(adms, Identifier);
DCATKIT_TERM(adms, identifier);
DCATKIT_TERM(adms, schemaAgency);
}  // namespace adms

namespace skos {
DCATKIT_TERM(skos, notation);
DCATKIT_TERM(skos, prefLabel);
}  // namespace skos

namespace dqv {
DCATKIT_TERM(dqv, QualityAnnotation);
DCATKIT_TERM(dqv, QualityMeasurement);
DCATKIT_TERM(dqv, QualityPolicy);
DCATKIT_TERM(dqv, hasQualityAnnotation);
DCATKIT_TERM(dqv, hasQualityMeasurement);
DCATKIT_TERM(dqv, isMeasurementOf);
}  // namespace dqv

namespace locn {
DCATKIT_TERM(locn, geometry);
}  // namespace locn

namespace time {
DCATKIT_TERM(time, hasBeginning);
DCATKIT_TERM(time, hasEnd);
DCATKIT_TERM(time, inXSDDate);
DCATKIT_TERM(time, inXSDDateTime);
DCATKIT_TERM(time, inXSDDateTimeStamp);
}  // namespace time

#undef DCATKIT_TERM

}  // namespace dcatkit::terms
