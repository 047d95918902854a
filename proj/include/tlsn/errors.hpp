#ifndef TLSN_ERRORS_HPP_
#define TLSN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tlsn {

// Structured protocol failure. `cause` is a stable machine-readable tag
// (the abort catalog and session reports key on it), `phase`/`party` say
// where the check fired.
class ProtocolError : public std::runtime_error {
public:
    ProtocolError(std::string cause, std::string detail = "", std::string phase = "",
                  std::string party = "")
        : std::runtime_error(cause + (detail.empty() ? "" : ": " + detail)),
          cause_(std::move(cause)),
          detail_(std::move(detail)),
          phase_(std::move(phase)),
          party_(std::move(party)) {}

    const std::string& cause() const { return cause_; }
    const std::string& detail() const { return detail_; }
    const std::string& phase() const { return phase_; }
    const std::string& party() const { return party_; }

private:
    std::string cause_, detail_, phase_, party_;
};

namespace errc {
// algebra
inline constexpr const char* ZeroInverse = "ZeroInverse";
inline constexpr const char* FieldMismatch = "FieldMismatch";
inline constexpr const char* OffCurvePoint = "OffCurvePoint";
inline constexpr const char* LowOrderPoint = "LowOrderPoint";
// circuits
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* ValidationError = "ValidationError";
inline constexpr const char* InputWidthMismatch = "InputWidthMismatch";
// garble
inline constexpr const char* WidthMismatch = "WidthMismatch";
inline constexpr const char* RowTagFailure = "RowTagFailure";
// ot
inline constexpr const char* DecryptionFailure = "DecryptionFailure";
// ole / share conversion
inline constexpr const char* LengthMismatch = "LengthMismatch";
inline constexpr const char* ChannelError = "ChannelError";
inline constexpr const char* ZeroInputDetected = "ZeroInputDetected";
inline constexpr const char* ZeroSum = "ZeroSum";
// deap
inline constexpr const char* CommitmentMalformed = "CommitmentMalformed";
inline constexpr const char* CommitmentMismatch = "CommitmentMismatch";
inline constexpr const char* InauthenticLabels = "InauthenticLabels";
inline constexpr const char* OtReplayMismatch = "OtReplayMismatch";
inline constexpr const char* RegarbleMismatch = "RegarbleMismatch";
inline constexpr const char* CheckMismatch = "CheckMismatch";
inline constexpr const char* CommitmentOpenFailure = "CommitmentOpenFailure";
inline constexpr const char* PhaseOrderViolation = "PhaseOrderViolation";
// handshake
inline constexpr const char* PointCollision = "PointCollision";
inline constexpr const char* SlopeZero = "SlopeZero";
inline constexpr const char* EqualityCheckFailed = "EqualityCheckFailed";
// record / mac
inline constexpr const char* MacMismatch = "MacMismatch";
inline constexpr const char* ConsistencyRejected = "ConsistencyRejected";
// notarize
inline constexpr const char* SignerFailure = "SignerFailure";
inline constexpr const char* RangeOverlap = "RangeOverlap";
inline constexpr const char* RangeOutOfBounds = "RangeOutOfBounds";
}  // namespace errc

}  // namespace tlsn

#endif
