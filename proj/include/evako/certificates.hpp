#pragma once

// Certificate documents for library results, in the layouts replayed by
// verify_document.

#include "evako/embed.hpp"
#include "evako/io.hpp"
#include "evako/separation.hpp"

namespace evako {

CertificateDocument contraction_document(const Graph& g, const ContractionCertificate& c);
CertificateDocument sphere_document(const Graph& g, const SphereCertificate& c);
CertificateDocument ball_document(const Graph& g, const BallCertificate& c);

/// Classifies G and H again to attach their sphere certificates.
CertificateDocument separation_document(const Graph& h, const Graph& g, const SeparationResult& r);
CertificateDocument schoenflies_document(const Graph& h, const Graph& g, const SchoenfliesCertificate& c);
/// `enhanced_host` says whether the trace lives in G1 rather than G.
CertificateDocument trace_document(const Graph& g, bool enhanced_host, const DeformationTrace& t);
CertificateDocument intersection_document(const Graph& h, const Graph& g, const IntersectionSetup& s,
                                          const Curve& c, const IntersectionCount& count);

json event_json(const IntersectionEvent& e);

}  // namespace evako
