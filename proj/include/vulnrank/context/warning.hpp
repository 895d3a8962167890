#pragma once

#include <string>

namespace vulnrank::context {

enum class WarningKind { BO, NPD };
enum class Label { FP, TP, Unknown };

// One static-analysis report: a flagged statement locus plus, when known,
// the ground-truth disposition.
struct Warning {
    std::string project;
    std::string file;
    int line = 0;
    WarningKind kind = WarningKind::BO;
    Label label = Label::Unknown;

    std::string id() const {
        return project + ":" + file + ":" + std::to_string(line);
    }
};

const char* kind_name(WarningKind k);
const char* label_name(Label l);
WarningKind parse_kind(const std::string& s);
Label parse_label(const std::string& s);

} // namespace vulnrank::context
