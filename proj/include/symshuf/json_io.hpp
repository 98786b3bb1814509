#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "markov.hpp"

namespace symshuf {

// SpectrumReport <-> JSON, big integers carried as decimal strings.
inline nlohmann::json report_to_json(const SpectrumReport& rep) {
    nlohmann::json j;
    j["family"] = rep.family;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["content"] = rep.content;
    j["dimension"] = rep.dimension.str();
    j["eigenvalues"] = nlohmann::json::array();
    for (auto& e : rep.eigenvalues) {
        nlohmann::json je;
        je["value"] = e.value.str();
        je["multiplicity"] = e.multiplicity.str();
        je["tableaux"] = e.tableaux;
        j["eigenvalues"].push_back(std::move(je));
    }
    return j;
}

inline SpectrumReport report_from_json(const nlohmann::json& j) {
    SpectrumReport rep;
    rep.family = j.at("family").get<std::string>();
    rep.n = j.at("n").get<int>();
    rep.k = j.at("k").get<int>();
    rep.content = j.at("content").get<std::vector<int>>();
    rep.dimension = Int(j.at("dimension").get<std::string>());
    for (auto& je : j.at("eigenvalues")) {
        EigenvalueEntry e;
        e.value = Int(je.at("value").get<std::string>());
        e.multiplicity = Int(je.at("multiplicity").get<std::string>());
        e.tableaux = je.at("tableaux").get<std::vector<std::string>>();
        rep.eigenvalues.push_back(std::move(e));
    }
    return rep;
}

// CSV matrix dump: first line the comma-separated basis labels, then one
// line of decimal integers per row.
inline std::string matrix_to_csv(const ExactMatrix& M) {
    std::ostringstream out;
    for (size_t i = 0; i < M.dim; ++i) {
        if (i) out << ',';
        out << M.basis[i];
    }
    out << '\n';
    for (size_t i = 0; i < M.dim; ++i) {
        for (size_t j = 0; j < M.dim; ++j) {
            if (j) out << ',';
            out << M.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline ExactMatrix matrix_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("matrix_from_csv: empty input");
    std::vector<std::string> labels;
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) labels.push_back(cell);
    ExactMatrix M(labels);
    for (size_t i = 0; i < M.dim; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("matrix_from_csv: missing row");
        std::stringstream row(line);
        for (size_t j = 0; j < M.dim; ++j) {
            if (!std::getline(row, cell, ','))
                throw std::invalid_argument("matrix_from_csv: short row");
            M.at(i, j) = Int(cell);
        }
    }
    return M;
}

}  // namespace symshuf
