// Exception types shared across the library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mrpos {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A token without a tag separator, or with an empty word/tag half.
class MalformedToken : public Error {
 public:
  MalformedToken(int line, int column, const std::string& token)
      : Error("malformed token '" + token + "' at line " + std::to_string(line) +
              ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line;    // 1-based source line
  int column;  // 1-based byte offset of the token start within the line
};

class MapFnError : public Error {
 public:
  MapFnError(int task, const std::string& cause)
      : Error("map task " + std::to_string(task) + " failed: " + cause), task(task) {}
  int task;
};

class ReduceFnError : public Error {
 public:
  ReduceFnError(int task, const std::string& cause)
      : Error("reduce task " + std::to_string(task) + " failed: " + cause), task(task) {}
  int task;
};

class EmptyTagset : public Error {
 public:
  EmptyTagset() : Error("tagset is empty") {}
};

class EmptyTrainingSet : public Error {
 public:
  EmptyTrainingSet() : Error("training set is empty") {}
};

class NumericOverflow : public Error {
 public:
  explicit NumericOverflow(const std::string& what) : Error("numeric overflow: " + what) {}
};

class ZeroModelExpectation : public Error {
 public:
  explicit ZeroModelExpectation(int feature)
      : Error("model expectation is zero for feature " + std::to_string(feature) +
              " with nonzero empirical expectation"),
        feature(feature) {}
  int feature;
};

class NewtonNonconvergence : public Error {
 public:
  explicit NewtonNonconvergence(int feature)
      : Error("IIS update did not converge for feature " + std::to_string(feature)),
        feature(feature) {}
  int feature;
};

class ZeroProbability : public Error {
 public:
  ZeroProbability(int position, const std::string& tag)
      : Error("tag '" + tag + "' has zero probability at position " + std::to_string(position)),
        position(position),
        tag(tag) {}
  int position;
  std::string tag;
};

class CorpusMismatch : public Error {
 public:
  CorpusMismatch(int sentence, int position, const std::string& detail)
      : Error("corpora diverge at sentence " + std::to_string(sentence) + ", token " +
              std::to_string(position) + ": " + detail),
        sentence(sentence),
        position(position) {}
  int sentence;  // 0-based
  int position;  // 0-based
};

class CorruptModel : public Error {
 public:
  CorruptModel(const std::string& section, int line, const std::string& detail)
      : Error("corrupt model file, section " + section + ", line " + std::to_string(line) +
              ": " + detail),
        section(section),
        line(line) {}
  std::string section;
  int line;  // 1-based line in the model file
};

}  // namespace mrpos
