#pragma once

#include <stdexcept>
#include <string>

namespace sumboost {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad inputs: malformed files, schema violations, degenerate data.
struct DataError : Error {
    using Error::Error;
};

/// Backend trouble: transport failures, exhausted retries, broken cache.
struct ProviderError : Error {
    using Error::Error;
};

// dataset
struct MissingTarget : DataError { using DataError::DataError; };
struct UnknownClass : DataError { using DataError::DataError; };
struct RaggedRow : DataError { using DataError::DataError; };
struct MissingValue : DataError { using DataError::DataError; };
struct TooFewClasses : DataError { using DataError::DataError; };
struct TooFewRows : DataError { using DataError::DataError; };

// discretize
struct EmptyColumn : DataError { using DataError::DataError; };
struct NotFitted : DataError { using DataError::DataError; };

// llm
struct ContextOverflow : DataError { using DataError::DataError; };
struct CacheCorruption : ProviderError { using ProviderError::ProviderError; };

// textualize
struct MissingPlaceholder : DataError { using DataError::DataError; };
struct LengthExhausted : DataError { using DataError::DataError; };

// sampling
struct EmptyClass : DataError { using DataError::DataError; };
struct SampleTooLarge : DataError { using DataError::DataError; };
struct DimensionMismatch : DataError { using DataError::DataError; };

// summary learner
struct EmptyDirective : DataError { using DataError::DataError; };
struct MappingFailure : DataError { using DataError::DataError; };
struct AllCandidatesFailed : DataError { using DataError::DataError; };

// boosting
struct LengthMismatch : DataError { using DataError::DataError; };
struct DegenerateError : DataError { using DataError::DataError; };
struct RoundResampleExhausted : DataError { using DataError::DataError; };
struct AllRoundsAbstained : DataError { using DataError::DataError; };

// baselines
struct EmptyTrainSet : DataError { using DataError::DataError; };

// mock oracle
struct NoPatternMatch : ProviderError { using ProviderError::ProviderError; };

}  // namespace sumboost
