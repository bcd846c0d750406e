#pragma once

#include <stdexcept>
#include <string>

namespace quizforge {

/// Every structured failure the compiler can report. The names double as the
/// machine-readable code in CLI diagnostics (`file:line: code: message`).
enum class ErrorCode {
    // spike file structure
    UnterminatedBlock,
    UnknownBlockKind,
    BadBlockHeader,
    NestedBlock,
    BadMarks,
    BadSecondArg,
    BadNAltOverride,
    MissingAtLine,
    MultipleAtLines,
    MissingSevenDashes,
    EmptyStatementBank,
    // curly-bracket expansion
    EmptyList,
    MalformedItem,
    EmptyRange,
    UnbalancedBraces,
    NotEnoughDistinctValues,
    MalformedMultiAssign,
    // interpreter
    SyntaxError,
    UndefinedVariable,
    UndefinedFunction,
    TypeError,
    LoopBudgetExceeded,
    RecursionLimit,
    IndexOutOfRange,
    MissingOutput,
    // string formatting
    ArgCountMismatch,
    BadDirective,
    // question engines
    MissingAnswer,
    DistractorExhausted,
    NonDigitAnswerTail,
    RNAltAnsUnsupported,
    KTooLarge,
    NAltAnsTooLargeForK,
    BadGeneratorSignature,
    DuplicateStatementExhausted,
    MissingOutOrTf,
    BadAnswerLetter,
    // emission & project layout
    NoDocumentEnv,
    MissingSentinel,
    NoDocumentClass,
    NoBeginDocument,
    NotAnIRBlock,
    IoError,
};

const char* error_code_name(ErrorCode code);

/// Structured compiler error. `line` is the 1-based source line the failure
/// is attributed to; 0 means no single line applies.
class SpikeError : public std::runtime_error {
public:
    SpikeError(ErrorCode code, std::string message, int line = 0)
        : std::runtime_error(std::move(message)), code_(code), line_(line) {}

    ErrorCode code() const { return code_; }
    int line() const { return line_; }
    void set_line(int line) { line_ = line; }

private:
    ErrorCode code_;
    int line_;
};

} // namespace quizforge
