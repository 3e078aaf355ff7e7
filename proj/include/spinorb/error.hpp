#pragma once

#include <stdexcept>
#include <string>

namespace spinorb {

enum class Errc {
    Parse,
    EtaOnUnequalRanks,
    RankCapExceeded,
    NonDominant,
    OutOfStableRange,
    SpaceMismatch,
    NotInV,
    RepresentativeFailsToCentralize,
    InvalidSignature,
    KOutOfRange,
    RegimeMismatch,
    MatchupFailure,
    VariantUnavailable,
    InvalidArgument,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace spinorb
