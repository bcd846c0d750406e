#include "quizforge/diagnostics.hpp"

namespace quizforge {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnterminatedBlock: return "UnterminatedBlock";
    case ErrorCode::UnknownBlockKind: return "UnknownBlockKind";
    case ErrorCode::BadBlockHeader: return "BadBlockHeader";
    case ErrorCode::NestedBlock: return "NestedBlock";
    case ErrorCode::BadMarks: return "BadMarks";
    case ErrorCode::BadSecondArg: return "BadSecondArg";
    case ErrorCode::BadNAltOverride: return "BadNAltOverride";
    case ErrorCode::MissingAtLine: return "MissingAtLine";
    case ErrorCode::MultipleAtLines: return "MultipleAtLines";
    case ErrorCode::MissingSevenDashes: return "MissingSevenDashes";
    case ErrorCode::EmptyStatementBank: return "EmptyStatementBank";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::MalformedItem: return "MalformedItem";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::UnbalancedBraces: return "UnbalancedBraces";
    case ErrorCode::NotEnoughDistinctValues: return "NotEnoughDistinctValues";
    case ErrorCode::MalformedMultiAssign: return "MalformedMultiAssign";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndefinedVariable: return "UndefinedVariable";
    case ErrorCode::UndefinedFunction: return "UndefinedFunction";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::LoopBudgetExceeded: return "LoopBudgetExceeded";
    case ErrorCode::RecursionLimit: return "RecursionLimit";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MissingOutput: return "MissingOutput";
    case ErrorCode::ArgCountMismatch: return "ArgCountMismatch";
    case ErrorCode::BadDirective: return "BadDirective";
    case ErrorCode::MissingAnswer: return "MissingAnswer";
    case ErrorCode::DistractorExhausted: return "DistractorExhausted";
    case ErrorCode::NonDigitAnswerTail: return "NonDigitAnswerTail";
    case ErrorCode::RNAltAnsUnsupported: return "RNAltAnsUnsupported";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::NAltAnsTooLargeForK: return "NAltAnsTooLargeForK";
    case ErrorCode::BadGeneratorSignature: return "BadGeneratorSignature";
    case ErrorCode::DuplicateStatementExhausted: return "DuplicateStatementExhausted";
    case ErrorCode::MissingOutOrTf: return "MissingOutOrTf";
    case ErrorCode::BadAnswerLetter: return "BadAnswerLetter";
    case ErrorCode::NoDocumentEnv: return "NoDocumentEnv";
    case ErrorCode::MissingSentinel: return "MissingSentinel";
    case ErrorCode::NoDocumentClass: return "NoDocumentClass";
    case ErrorCode::NoBeginDocument: return "NoBeginDocument";
    case ErrorCode::NotAnIRBlock: return "NotAnIRBlock";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace quizforge
