#pragma once

#include <string>
#include <vector>

namespace nullflat {

/// Deterministic JSON emitter: fields appear exactly in call order and every
/// double is formatted with %.17g (value-preserving, byte-stable across
/// runs). Non-finite numbers are rejected; nothing here should produce one.
class JsonOut {
public:
    JsonOut& begin_object();
    JsonOut& end_object();
    JsonOut& begin_array();
    JsonOut& end_array();

    /// Object member key; must be followed by exactly one value.
    JsonOut& key(const std::string& name);

    JsonOut& value(double v);
    JsonOut& value(int v);
    JsonOut& value(const std::string& v);
    JsonOut& value(const char* v);
    JsonOut& value(bool v);
    JsonOut& null_value();

    /// Inserts pre-rendered JSON text as one value (caller guarantees it is
    /// a complete JSON value).
    JsonOut& raw_value(const std::string& json_text);

    JsonOut& number_array(const std::vector<double>& values);

    /// Finished document text (with a trailing newline).
    std::string str() const;

    /// %.17g rendering shared with the CSV writer.
    static std::string format_double(double v);

private:
    void comma_if_needed();

    std::string out_;
    std::vector<bool> needs_comma_;  // one flag per open scope
    bool pending_key_ = false;
};

}  // namespace nullflat
