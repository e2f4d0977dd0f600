#pragma once

#include <bdom/design.hpp>

#include <string>
#include <string_view>

namespace bdom
{
    /// Plain-text design format:
    ///
    ///     # comment lines start with '#', blank lines are ignored
    ///     v k lambda
    ///     1 2 3          <- one block per line, 1-based points
    ///
    /// Throws SyntaxError with a line/column position, or ValidationError.
    auto parse_design_file(std::string_view text) -> Design;

    /// Writes the format above; `title`, if non-empty, becomes a comment line.
    auto emit_design_file(const Design & d, std::string_view title = {}) -> std::string;

    auto read_design_file(const std::string & path) -> Design;

    struct NamedDesign
    {
        std::string label;
        Design design;
    };

    /// Resolves a design source: an existing file path, or a built-in name.
    /// Built-ins: fano, ag9, fixture-843, pg:<q>, sts-bose:<v>,
    /// cyclic:<sts13|sts19|biplane11>, and the transforms double:<src>,
    /// complement:<src>, dual:<src>, residual:<src>, derived:<src> (block 1),
    /// pasch-trade:<src> (first Pasch configuration).
    auto resolve_design(const std::string & source) -> NamedDesign;
}
