#pragma once

#include <stdexcept>
#include <string>

namespace bhrank {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two arcs with the same (src, dst) pair were supplied at construction.
class DuplicateArc : public Error {
public:
    using Error::Error;
};

/// An arc weight lies outside the node's declared [l, h] scale.
class WeightOutOfBounds : public Error {
public:
    using Error::Error;
};

/// A weight scale with h <= l was supplied.
class InvalidBounds : public Error {
public:
    using Error::Error;
};

/// An arc references a node index >= the node count.
class NodeIndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// An arc with src == dst was supplied.
class SelfLoop : public Error {
public:
    using Error::Error;
};

/// A non-sink node whose outgoing weights sum to zero; the PageRank
/// normalization divides by this sum.
class ZeroOutStrength : public Error {
public:
    using Error::Error;
};

/// The weight scale of a node is degenerate (h <= l) at transform time.
class DegenerateScale : public Error {
public:
    using Error::Error;
};

/// An input file could not be parsed; the message carries line and reason.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An input file contains no nodes.
class EmptyGraph : public Error {
public:
    using Error::Error;
};

/// Two rank-position vectors of different length were compared.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// A generator spec that can never reach its target node count.
class SpecUnreachable : public Error {
public:
    using Error::Error;
};

/// A graph exceeds the size bound of the dense solver.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// A configuration value violates its contract (e.g. damping factor).
class InvalidConfig : public Error {
public:
    using Error::Error;
};

} // namespace bhrank
