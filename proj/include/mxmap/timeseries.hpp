#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mxmap {

/// A single named, uniformly sampled series of real values.
struct TimeSeries {
    std::string name;
    std::vector<double> values;

    std::size_t length() const { return values.size(); }

    /// Throws DataError if empty or containing non-finite values.
    void validate() const;
};

/// Equal-length collection of named series from one system.
class Dataset {
  public:
    Dataset() = default;
    /// Takes ownership of the series. Throws DataError on length mismatch,
    /// duplicate names, or invalid member series.
    explicit Dataset(std::vector<TimeSeries> variables);

    std::size_t size() const { return variables_.size(); }
    std::size_t length() const { return length_; }

    const TimeSeries& operator[](std::size_t i) const { return variables_.at(i); }
    const std::vector<TimeSeries>& variables() const { return variables_; }

    std::vector<std::string> names() const;
    /// Index of a variable by name; throws DataError if absent.
    std::size_t index_of(const std::string& name) const;

    /// Dataset truncated to its first `len` samples.
    Dataset prefix(std::size_t len) const;

    /// Standardize every variable to zero mean / unit variance in place.
    /// Throws DegenerateInputError on a constant variable.
    void zscore();

  private:
    std::vector<TimeSeries> variables_;
    std::size_t length_ = 0;
};

/// Writes header (variable names) plus one row per time step with full
/// double round-trip precision.
void write_csv(const Dataset& data, const std::string& path);
std::string to_csv(const Dataset& data);

/// Parses a header + numeric rows. Errors carry the 1-based line number of
/// the first offending row.
Dataset read_csv(const std::string& path);
Dataset parse_csv(const std::string& text);

} // namespace mxmap
