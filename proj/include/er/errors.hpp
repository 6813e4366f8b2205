#pragma once
#include <stdexcept>
#include <string>

namespace er {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic layer
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct EvenCharacteristic : Error { using Error::Error; };
struct BadLength : Error { using Error::Error; };
struct NoBinomial : Error { using Error::Error; };

// Graph layer
struct BadOrder : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotTotal : Error { using Error::Error; };

// Coloring layer
struct SameClass : Error { using Error::Error; };
struct ZeroScale : Error { using Error::Error; };
struct NotHVertex : Error { using Error::Error; };

// Chromatic-number certificate layer
struct SearchExhausted : Error { using Error::Error; };
struct NotFourChromatic : Error { using Error::Error; };
struct IsSquare : Error { using Error::Error; };

}  // namespace er
