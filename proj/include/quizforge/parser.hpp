#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quizforge/diagnostics.hpp"

namespace quizforge {

enum class BlockKind {
    Text,
    Data,
    ProblemI,
    ProblemR,
    ProblemT,
    ProblemG,
    ProblemH,
    ProblemV,
    ProblemZ,
};

bool is_problem_kind(BlockKind kind);
char type_letter(BlockKind kind);
const char* block_kind_name(BlockKind kind);

/// A source file split into raw lines. Line numbers are 1-based and
/// contiguous; both LF and CRLF inputs are accepted.
struct SourceFile {
    std::string path;
    std::vector<std::string> lines;

    static SourceFile from_text(std::string path, std::string_view text);
};

/// One spike-block: the region between `<<kind;` and `>>`, both at column 1.
/// `body_lines` excludes the header and terminator lines; the raw forms are
/// kept so a file can be reassembled byte-for-byte.
struct Block {
    BlockKind kind;
    std::vector<std::string> body_lines;
    int start_line = 0; // line of the `<<kind;` header
    int end_line = 0;   // line of the `>>` terminator
    std::string header_line;
    std::string terminator_line;
};

/// The parsed `@`-line of a problem block. `marks` holds 1..4 non-negative
/// integers; the second argument depends on the block kind:
///   I/R -> `params` (parameter expressions for the text part)
///   T/G/H -> `count_k` (number of statements to draw)
///   V -> `answer_letter`
struct AtLine {
    std::vector<int> marks;
    std::vector<std::string> params;
    int count_k = 0;
    char answer_letter = '\0';
    std::optional<int> nalt_override;
    int line = 0;
};

/// Internal structure of a problem block body.
struct ProblemBody {
    BlockKind kind = BlockKind::ProblemI;
    std::vector<std::string> command_lines;
    AtLine at;
    std::vector<std::string> text_lines;
    std::vector<std::string> false_statements; // T only
    std::vector<std::string> true_statements;  // T only
    int start_line = 0; // header line of the owning block
};

/// Splits a source file into blocks. Content outside blocks is discarded;
/// `<<` / `>>` anywhere but column 1 is ordinary text.
std::vector<Block> parse_spike_file(const SourceFile& src);

AtLine parse_at_line(const std::string& line, BlockKind kind, int line_no);

/// Separates a problem block into command part, at-line and text part; for
/// type T also splits the statement banks at the seven-dash line.
ProblemBody split_problem_body(const Block& block);

} // namespace quizforge
