#pragma once

#include <stdexcept>
#include <string>

namespace locert {

enum class Errc {
    DuplicateEdge,
    SelfLoop,
    Disconnected,
    IndexOutOfRange,
    InvalidArgument,
    NotAnEdge,
    ConflictingEdge,
    MalformedCertificate,
    NotATree,
    InvalidOrdering,
    NoEligibleParent,
    BoundExceeded,
    EmptySubset,
    MemberNotEnabled,
    NothingEnabled,
    BadFormat,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace locert
