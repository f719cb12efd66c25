#include "nullflat/json_out.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nullflat {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

}  // namespace

std::string JsonOut::format_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("JsonOut: non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonOut::comma_if_needed() {
    if (pending_key_) return;
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ += ',';
        needs_comma_.back() = true;
    }
}

JsonOut& JsonOut::begin_object() {
    comma_if_needed();
    pending_key_ = false;
    out_ += '{';
    needs_comma_.push_back(false);
    return *this;
}

JsonOut& JsonOut::end_object() {
    if (needs_comma_.empty()) throw std::logic_error("JsonOut: end_object without begin");
    needs_comma_.pop_back();
    out_ += '}';
    return *this;
}

JsonOut& JsonOut::begin_array() {
    comma_if_needed();
    pending_key_ = false;
    out_ += '[';
    needs_comma_.push_back(false);
    return *this;
}

JsonOut& JsonOut::end_array() {
    if (needs_comma_.empty()) throw std::logic_error("JsonOut: end_array without begin");
    needs_comma_.pop_back();
    out_ += ']';
    return *this;
}

JsonOut& JsonOut::key(const std::string& name) {
    comma_if_needed();
    out_ += '"';
    out_ += escape(name);
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonOut& JsonOut::value(double v) {
    comma_if_needed();
    pending_key_ = false;
    out_ += format_double(v);
    return *this;
}

JsonOut& JsonOut::value(int v) {
    comma_if_needed();
    pending_key_ = false;
    out_ += std::to_string(v);
    return *this;
}

JsonOut& JsonOut::value(const std::string& v) {
    comma_if_needed();
    pending_key_ = false;
    out_ += '"';
    out_ += escape(v);
    out_ += '"';
    return *this;
}

JsonOut& JsonOut::value(const char* v) { return value(std::string(v)); }

JsonOut& JsonOut::value(bool v) {
    comma_if_needed();
    pending_key_ = false;
    out_ += v ? "true" : "false";
    return *this;
}

JsonOut& JsonOut::null_value() {
    comma_if_needed();
    pending_key_ = false;
    out_ += "null";
    return *this;
}

JsonOut& JsonOut::raw_value(const std::string& json_text) {
    comma_if_needed();
    pending_key_ = false;
    out_ += json_text;
    return *this;
}

JsonOut& JsonOut::number_array(const std::vector<double>& values) {
    begin_array();
    for (double v : values) value(v);
    return end_array();
}

std::string JsonOut::str() const {
    if (!needs_comma_.empty()) throw std::logic_error("JsonOut: unclosed scope");
    return out_ + "\n";
}

}  // namespace nullflat
