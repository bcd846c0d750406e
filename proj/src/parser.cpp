#include "quizforge/parser.hpp"

#include <cctype>

#include "quizforge/text_util.hpp"

namespace quizforge {

bool is_problem_kind(BlockKind kind) {
    return kind != BlockKind::Text && kind != BlockKind::Data;
}

char type_letter(BlockKind kind) {
    switch (kind) {
    case BlockKind::ProblemI: return 'I';
    case BlockKind::ProblemR: return 'R';
    case BlockKind::ProblemT: return 'T';
    case BlockKind::ProblemG: return 'G';
    case BlockKind::ProblemH: return 'H';
    case BlockKind::ProblemV: return 'V';
    case BlockKind::ProblemZ: return 'Z';
    default: return '?';
    }
}

const char* block_kind_name(BlockKind kind) {
    switch (kind) {
    case BlockKind::Text: return "text";
    case BlockKind::Data: return "data";
    case BlockKind::ProblemI: return "problemI";
    case BlockKind::ProblemR: return "problemR";
    case BlockKind::ProblemT: return "problemT";
    case BlockKind::ProblemG: return "problemG";
    case BlockKind::ProblemH: return "problemH";
    case BlockKind::ProblemV: return "problemV";
    case BlockKind::ProblemZ: return "problemZ";
    }
    return "?";
}

SourceFile SourceFile::from_text(std::string path, std::string_view text) {
    SourceFile src;
    src.path = std::move(path);
    src.lines = split_lines(text);
    return src;
}

namespace {

std::optional<BlockKind> lookup_kind(std::string_view name) {
    if (name == "text") return BlockKind::Text;
    if (name == "data") return BlockKind::Data;
    if (name == "problemI") return BlockKind::ProblemI;
    if (name == "problemR") return BlockKind::ProblemR;
    if (name == "problemT") return BlockKind::ProblemT;
    if (name == "problemG") return BlockKind::ProblemG;
    if (name == "problemH") return BlockKind::ProblemH;
    if (name == "problemV") return BlockKind::ProblemV;
    if (name == "problemZ") return BlockKind::ProblemZ;
    return std::nullopt;
}

BlockKind parse_header(const std::string& line, int line_no) {
    // Header form is `<<kind;` with nothing but spaces allowed after the
    // semicolon. A missing semicolon is an error rather than a guess.
    std::size_t semi = line.find(';');
    if (semi == std::string::npos)
        throw SpikeError(ErrorCode::BadBlockHeader,
                         "block header is missing the ';' after its kind", line_no);
    std::string_view name = std::string_view(line).substr(2, semi - 2);
    if (!trim_view(std::string_view(line).substr(semi + 1)).empty())
        throw SpikeError(ErrorCode::BadBlockHeader,
                         "unexpected text after ';' in block header", line_no);
    auto kind = lookup_kind(name);
    if (!kind)
        throw SpikeError(ErrorCode::UnknownBlockKind,
                         "unknown block kind '" + std::string(name) + "'", line_no);
    return *kind;
}

bool starts_with(const std::string& s, const char* prefix) {
    return s.rfind(prefix, 0) == 0;
}

} // namespace

std::vector<Block> parse_spike_file(const SourceFile& src) {
    std::vector<Block> blocks;
    bool in_block = false;
    Block current;
    for (std::size_t i = 0; i < src.lines.size(); ++i) {
        const std::string& line = src.lines[i];
        int line_no = static_cast<int>(i) + 1;
        if (!in_block) {
            if (starts_with(line, "<<")) {
                current = Block{};
                current.kind = parse_header(line, line_no);
                current.start_line = line_no;
                current.header_line = line;
                in_block = true;
            }
            // anything else between blocks is ignored
            continue;
        }
        if (starts_with(line, ">>")) {
            current.end_line = line_no;
            current.terminator_line = line;
            blocks.push_back(std::move(current));
            in_block = false;
            continue;
        }
        if (starts_with(line, "<<"))
            throw SpikeError(ErrorCode::NestedBlock,
                             "'<<' at column 1 inside the block opened at line " +
                                 std::to_string(current.start_line),
                             line_no);
        current.body_lines.push_back(line);
    }
    if (in_block)
        throw SpikeError(ErrorCode::UnterminatedBlock,
                         "block opened at line " + std::to_string(current.start_line) +
                             " has no '>>' terminator",
                         current.start_line);
    return blocks;
}

namespace {

int parse_nonneg_int(std::string_view field, ErrorCode code, int line_no,
                     const char* what) {
    std::string_view t = trim_view(field);
    if (t.empty() || t.size() > 9)
        throw SpikeError(code, std::string("bad ") + what + " '" + std::string(field) + "'",
                         line_no);
    long v = 0;
    for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw SpikeError(code,
                             std::string(what) + " '" + std::string(t) + "' is not a non-negative integer",
                             line_no);
        v = v * 10 + (c - '0');
    }
    return static_cast<int>(v);
}

} // namespace

AtLine parse_at_line(const std::string& line, BlockKind kind, int line_no) {
    std::string_view body = trim_view(line);
    if (body.empty() || body.front() != '@')
        throw SpikeError(ErrorCode::MissingAtLine, "at-line must start with '@'", line_no);
    body.remove_prefix(1);

    auto fields = split_top_level(body, ';');
    // a trailing ';' produces one empty trailing field; drop it
    while (!fields.empty() && trim_view(fields.back()).empty()) fields.pop_back();

    AtLine at;
    at.line = line_no;
    if (fields.empty())
        throw SpikeError(ErrorCode::BadMarks, "at-line has no marks argument", line_no);

    auto mark_fields = split_top_level(fields[0], ',');
    if (mark_fields.empty() || mark_fields.size() > 4)
        throw SpikeError(ErrorCode::BadMarks,
                         "marks argument must hold 1 to 4 numbers", line_no);
    for (const auto& m : mark_fields)
        at.marks.push_back(parse_nonneg_int(m, ErrorCode::BadMarks, line_no, "mark"));

    std::string second = fields.size() > 1 ? trim(fields[1]) : std::string();
    switch (kind) {
    case BlockKind::ProblemI:
    case BlockKind::ProblemR:
        if (!second.empty())
            for (auto& p : split_top_level(second, ','))
                at.params.push_back(trim(p));
        break;
    case BlockKind::ProblemT:
    case BlockKind::ProblemG:
    case BlockKind::ProblemH: {
        int k = parse_nonneg_int(second, ErrorCode::BadSecondArg, line_no, "statement count");
        if (k < 1)
            throw SpikeError(ErrorCode::BadSecondArg,
                             "statement count must be a positive integer", line_no);
        at.count_k = k;
        break;
    }
    case BlockKind::ProblemV:
        if (second.size() != 1 || !std::isupper(static_cast<unsigned char>(second[0])))
            throw SpikeError(ErrorCode::BadSecondArg,
                             "type V expects a single answer letter, got '" + second + "'",
                             line_no);
        at.answer_letter = second[0];
        break;
    default:
        throw SpikeError(ErrorCode::BadSecondArg, "block kind has no at-line", line_no);
    }

    if (fields.size() > 2 && !trim_view(fields[2]).empty()) {
        int n = parse_nonneg_int(fields[2], ErrorCode::BadNAltOverride, line_no,
                                 "NAltAns override");
        if (n < 2 || n > 8)
            throw SpikeError(ErrorCode::BadNAltOverride,
                             "NAltAns override " + std::to_string(n) + " is outside 2..8",
                             line_no);
        at.nalt_override = n;
    }
    if (fields.size() > 3)
        throw SpikeError(ErrorCode::BadNAltOverride,
                         "at-line has more than three arguments", line_no);
    return at;
}

namespace {

bool is_at_line(const std::string& line) {
    std::string_view t = trim_view(line);
    return !t.empty() && t.front() == '@';
}

bool is_seven_dashes(const std::string& line) {
    return line.size() >= 7 && line.compare(0, 7, "-------") == 0;
}

bool is_comment_line(const std::string& line) {
    return !line.empty() && line.front() == '%';
}

} // namespace

ProblemBody split_problem_body(const Block& block) {
    ProblemBody body;
    body.kind = block.kind;
    body.start_line = block.start_line;

    int at_index = -1;
    for (std::size_t i = 0; i < block.body_lines.size(); ++i) {
        if (!is_at_line(block.body_lines[i])) continue;
        if (at_index >= 0)
            throw SpikeError(ErrorCode::MultipleAtLines, "block has more than one at-line",
                             block.start_line + static_cast<int>(i) + 1);
        at_index = static_cast<int>(i);
    }
    if (at_index < 0)
        throw SpikeError(ErrorCode::MissingAtLine,
                         "problem block has no at-line", block.start_line);

    int at_line_no = block.start_line + at_index + 1;
    body.at = parse_at_line(block.body_lines[at_index], block.kind, at_line_no);
    body.text_lines.assign(block.body_lines.begin() + at_index + 1, block.body_lines.end());

    std::vector<std::string> before(block.body_lines.begin(),
                                    block.body_lines.begin() + at_index);
    switch (block.kind) {
    case BlockKind::ProblemI:
    case BlockKind::ProblemR:
    case BlockKind::ProblemH:
        body.command_lines = std::move(before);
        break;
    case BlockKind::ProblemG: {
        for (auto& line : before)
            if (!is_blank(line)) body.command_lines.push_back(line);
        if (body.command_lines.size() != 1)
            throw SpikeError(ErrorCode::BadGeneratorSignature,
                             "type G expects exactly one command line naming the generator",
                             block.start_line);
        break;
    }
    case BlockKind::ProblemT: {
        int dash_index = -1;
        for (std::size_t i = 0; i < before.size(); ++i) {
            if (is_seven_dashes(before[i])) {
                dash_index = static_cast<int>(i);
                break;
            }
        }
        if (dash_index < 0)
            throw SpikeError(ErrorCode::MissingSevenDashes,
                             "type T statement banks must be separated by a seven-dash line",
                             block.start_line);
        for (int i = 0; i < dash_index; ++i) {
            const auto& line = before[i];
            if (is_comment_line(line) || is_blank(line)) continue;
            body.false_statements.push_back(trim(line));
        }
        for (std::size_t i = dash_index + 1; i < before.size(); ++i) {
            const auto& line = before[i];
            if (is_comment_line(line) || is_blank(line)) continue;
            body.true_statements.push_back(trim(line));
        }
        if (body.false_statements.empty() || body.true_statements.empty())
            throw SpikeError(ErrorCode::EmptyStatementBank,
                             "type T needs at least one false and one true statement",
                             block.start_line);
        break;
    }
    case BlockKind::ProblemV:
        // V has no command part; anything before the at-line is ignored.
        break;
    default:
        throw SpikeError(ErrorCode::MissingAtLine,
                         "split_problem_body called on a non-problem block",
                         block.start_line);
    }
    return body;
}

} // namespace quizforge
