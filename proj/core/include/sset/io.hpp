#pragma once

#include "sset/minimal.hpp"

namespace sset {

struct Diagnostic {
    enum class Kind { none, syntax, dangling_reference, identity_violation, io };
    Kind kind = Kind::none;
    int line = 0;
    int column = 0;
    std::string message;

    bool ok() const { return kind == Kind::none; }
    std::string str() const;
};

/// Named objects and maps available for reference resolution.
struct Environment {
    std::map<std::string, Presentation> ssets;
    std::map<std::string, SimplicialMap> smaps;
};

template <class T>
struct Parsed {
    std::optional<T> value;
    Diagnostic diag;
    bool ok() const { return diag.ok(); }
};

/// Line-oriented ".sset" text: `sset <name>`, `simplex <id> <degree>`,
/// `face <id> <i> = [s<j> ]* <baseid>`; '#' starts a comment.
Parsed<Presentation> parse_sset(const std::string& text);

/// `.smap`: `smap <name> : <X> -> <Y>`, `send <id> = [s<j> ]* <id>`.
Parsed<SimplicialMap> parse_smap(const std::string& text, const Environment& env);

/// `.trace`: `trace <name>`, `stage attach horn <p> <k> via <smap>`,
/// `compose` closes a stage.
Parsed<AnodyneTrace> parse_trace(const std::string& text, const Environment& env);

/// Canonical serialization: sorted, single spaces, trailing newline.
/// parse o serialize is the identity byte-for-byte on canonical files.
std::string serialize_sset(const Presentation& X);
std::string serialize_smap(const SimplicialMap& f);
std::string serialize_trace(const AnodyneTrace& tr);

/// Loads every .sset, then every .smap (both sorted by filename).
Diagnostic load_directory(const std::string& dir, Environment& env);

Diagnostic write_file(const std::string& path, const std::string& bytes);
Parsed<std::string> read_file(const std::string& path);

/// Serializes every intermediate of a correction trace as a named .smap
/// under `dir` (created if needed), plus a small manifest.
Diagnostic write_correction_trace(const std::string& dir, const CorrectionTrace& tr);

}  // namespace sset
