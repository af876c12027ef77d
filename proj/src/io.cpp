// Copyright 2026 coherence-lab developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cohlab {

using nlohmann::json;

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    return json{{"dim", m.rows()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const Eigen::Index d = j.at("dim").get<Eigen::Index>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (static_cast<Eigen::Index>(re.size()) != d * d ||
        static_cast<Eigen::Index>(im.size()) != d * d)
        throw validation_error("matrix_from_json: re/im arrays must hold dim*dim entries");
    ComplexMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
            const std::size_t k = static_cast<std::size_t>(r * d + c);
            m(r, c) = Complex(re[k].get<double>(), im[k].get<double>());
        }
    return m;
}

nlohmann::json vector_to_json(const ComplexVector& v) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        re.push_back(v(i).real());
        im.push_back(v(i).imag());
    }
    return json{{"re", re}, {"im", im}};
}

ComplexVector vector_from_json(const json& j) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != im.size())
        throw validation_error("vector_from_json: re/im length mismatch");
    ComplexVector v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = Complex(re[i].get<double>(), im[i].get<double>());
    return v;
}

nlohmann::json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

DensityMatrix state_from_json(const json& j) { return DensityMatrix(matrix_from_json(j)); }

nlohmann::json frame_to_json(const ReferenceFrame& frame) {
    if (const auto* basis = std::get_if<OrthonormalBasis>(&frame)) {
        json vectors = json::array();
        for (Eigen::Index c = 0; c < basis->dim(); ++c)
            vectors.push_back(vector_to_json(basis->vector(c)));
        return json{{"kind", "basis"}, {"dim", basis->dim()}, {"vectors", vectors}};
    }
    if (const auto* luders = std::get_if<LudersFrame>(&frame)) {
        json projectors = json::array();
        for (const auto& pj : luders->decomposition.projectors())
            projectors.push_back(matrix_to_json(pj.matrix()));
        json out{{"kind", "projectors"},
                 {"dim", luders->decomposition.dim()},
                 {"projectors", projectors}};
        if (luders->refinement) {
            json vectors = json::array();
            for (Eigen::Index c = 0; c < luders->refinement->dim(); ++c)
                vectors.push_back(vector_to_json(luders->refinement->vector(c)));
            out["refinement"] = vectors;
        }
        return out;
    }
    const auto& povm_frame = std::get<PovmFrame>(frame);
    json vectors = json::array();
    for (const auto& mu : povm_frame.povm.mu_vectors()) vectors.push_back(vector_to_json(mu));
    return json{{"kind", "povm"}, {"dim", povm_frame.povm.dim()}, {"vectors", vectors}};
}

ReferenceFrame frame_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "basis") {
        const auto& vecs = j.at("vectors");
        const Eigen::Index d = j.at("dim").get<Eigen::Index>();
        if (static_cast<Eigen::Index>(vecs.size()) != d)
            throw validation_error("frame_from_json: basis needs dim vectors");
        ComplexMatrix m(d, d);
        for (Eigen::Index c = 0; c < d; ++c) m.col(c) = vector_from_json(vecs[static_cast<std::size_t>(c)]);
        return OrthonormalBasis(std::move(m));
    }
    if (kind == "projectors") {
        std::vector<HermitianOperator> projs;
        for (const auto& pj : j.at("projectors"))
            projs.emplace_back(matrix_from_json(pj));
        ProjectorDecomposition p(std::move(projs));
        std::optional<OrthonormalBasis> refinement;
        if (j.contains("refinement")) {
            const auto& vecs = j.at("refinement");
            ComplexMatrix m(p.dim(), p.dim());
            if (static_cast<Eigen::Index>(vecs.size()) != p.dim())
                throw validation_error("frame_from_json: refinement needs dim vectors");
            for (Eigen::Index c = 0; c < p.dim(); ++c)
                m.col(c) = vector_from_json(vecs[static_cast<std::size_t>(c)]);
            refinement = OrthonormalBasis(std::move(m));
        } else {
            refinement = refinement_basis(p);
        }
        return LudersFrame{std::move(p), std::move(refinement)};
    }
    if (kind == "povm") {
        std::vector<ComplexVector> mu;
        for (const auto& v : j.at("vectors")) mu.push_back(vector_from_json(v));
        RankOnePovm povm(std::move(mu));
        NaimarkBasis naimark = naimark_completion(povm);
        return PovmFrame{std::move(povm), std::move(naimark)};
    }
    throw validation_error("frame_from_json: unknown kind '" + kind + "'");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

DensityMatrix load_state(const std::string& path) { return state_from_json(load_json(path)); }

ReferenceFrame load_frame(const std::string& path) { return frame_from_json(load_json(path)); }

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "# coherence-lab " << kVersion << "\n";
    out << "eta,alpha,max,min,at_theta_states,max_vartheta,max_varphi,min_vartheta,min_varphi\n";
    for (const auto& r : records) {
        out << format_double(r.eta) << ',' << format_double(r.alpha) << ','
            << format_double(r.max_value) << ',' << format_double(r.min_value) << ','
            << format_double(r.value_at_theta_states) << ',' << format_double(r.max_vartheta)
            << ',' << format_double(r.max_varphi) << ',' << format_double(r.min_vartheta) << ','
            << format_double(r.min_varphi) << "\n";
    }
}

std::vector<SweepRecord> read_sweep_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<SweepRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("eta,", 0) == 0) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
        if (cells.size() != 9)
            throw std::runtime_error("read_sweep_csv: malformed row '" + line + "'");
        SweepRecord r;
        r.eta = cells[0];
        r.alpha = cells[1];
        r.max_value = cells[2];
        r.min_value = cells[3];
        r.value_at_theta_states = cells[4];
        r.max_vartheta = cells[5];
        r.max_varphi = cells[6];
        r.min_vartheta = cells[7];
        r.min_varphi = cells[8];
        records.push_back(r);
    }
    return records;
}

}  // namespace cohlab
