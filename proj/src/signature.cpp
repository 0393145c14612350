#include "fano/signature.hpp"

#include <algorithm>
#include <sstream>

namespace fano {

std::string simple_type_name(SimpleType t) {
    switch (t) {
        case SimpleType::A1: return "A1";
        case SimpleType::A2: return "A2";
        case SimpleType::A3: return "A3";
        case SimpleType::B2: return "B2";
    }
    return "?";
}

int simple_type_dim(SimpleType t) {
    switch (t) {
        case SimpleType::A1: return 3;
        case SimpleType::A2: return 8;
        case SimpleType::A3: return 15;
        case SimpleType::B2: return 10;
    }
    return 0;
}

int simple_type_rank(SimpleType t) {
    switch (t) {
        case SimpleType::A1: return 1;
        case SimpleType::A2: return 2;
        case SimpleType::A3: return 3;
        case SimpleType::B2: return 2;
    }
    return 0;
}

std::string LieSignature::str() const {
    std::ostringstream os;
    os << "dim=" << dim << " derived=" << derived_dim << " radical=" << radical_dim
       << " unipotent=" << unipotent_dim << " toral=" << toral_rank << " killing=" << killing_rank
       << " levi=[";
    for (size_t i = 0; i < levi.size(); ++i) os << (i ? "+" : "") << simple_type_name(levi[i]);
    os << "]" << (reductive ? " reductive" : " non-reductive") << (abelian ? " abelian" : "");
    return os.str();
}

namespace {

std::vector<SimpleType> identify_levi(int levi_dim) {
    switch (levi_dim) {
        case 0: return {};
        case 3: return {SimpleType::A1};
        case 6: return {SimpleType::A1, SimpleType::A1};
        case 8: return {SimpleType::A2};
        case 10: return {SimpleType::B2};
        case 15: return {SimpleType::A3};
        default:
            throw SignatureError("signature: unrecognized Levi dimension " + std::to_string(levi_dim));
    }
}

}  // namespace

LieSignature signature(const Subalgebra& s) {
    LieSignature sig;
    const int k = s.dim();
    sig.dim = k;
    if (k == 0) return sig;

    // Derived algebra: span of the structure-constant columns in basis coords.
    std::vector<Vec> brackets;
    bool any_nonzero = false;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Vec& c = s.structure[i][j];
            bool nz = false;
            for (const auto& x : c) nz = nz || !is_zero(x);
            if (nz) {
                brackets.push_back(c);
                any_nonzero = true;
            }
        }
    sig.abelian = !any_nonzero;
    sig.derived_dim = brackets.empty() ? 0 : span_rank(brackets);

    // Killing form from the adjoint representation in basis coordinates.
    Mat killing(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Rat t = 0;  // tr(ad_i ad_j) = sum_{l,m} c_{il}^m c_{jm}^l
            for (int l = 0; l < k; ++l)
                for (int m = 0; m < k; ++m) t += s.structure[i][l][m] * s.structure[j][m][l];
            killing.at(i, j) = t;
            killing.at(j, i) = t;
        }
    sig.killing_rank = rank(killing);

    // Radical = Killing-orthogonal complement of the derived algebra in g
    // (the characteristic-zero radical criterion).
    std::vector<Vec> radical_coords;
    if (brackets.empty()) {
        for (int i = 0; i < k; ++i) {
            Vec e(k, Rat(0));
            e[i] = 1;
            radical_coords.push_back(std::move(e));
        }
    } else {
        std::vector<Vec> rows;
        for (const auto& d : brackets) {
            Vec row(k, Rat(0));
            for (int l = 0; l < k; ++l) {
                if (is_zero(d[l])) continue;
                for (int j = 0; j < k; ++j) row[j] += d[l] * killing.at(l, j);
            }
            rows.push_back(std::move(row));
        }
        radical_coords = kernel_basis(Mat::from_rows(rows));
    }
    sig.radical_dim = static_cast<int>(radical_coords.size());

    auto element_of = [&](const Vec& coords) {
        AlgElement e = zero_element(s.ambient.ring);
        for (int l = 0; l < k; ++l)
            if (!is_zero(coords[l])) e = e + s.basis[l] * coords[l];
        return e;
    };

    std::vector<AlgElement> radical_elems;
    for (const auto& c : radical_coords) radical_elems.push_back(element_of(c));

    // Unipotent part: kernel of the defining-representation trace form on the
    // radical. The kernel basis must consist of nilpotent matrices; this
    // post-check turns a wrong heuristic into a hard error instead of a wrong
    // answer.
    std::vector<Vec> unipotent_coords;
    if (sig.radical_dim > 0) {
        const int r = sig.radical_dim;
        Mat tform(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) {
                Rat t = radical_elems[i].trace_form(radical_elems[j]);
                tform.at(i, j) = t;
                tform.at(j, i) = t;
            }
        auto ker = kernel_basis(tform);
        for (const auto& kc : ker) {
            Vec full(k, Rat(0));
            for (int p = 0; p < r; ++p)
                for (int l = 0; l < k; ++l) full[l] += kc[p] * radical_coords[p][l];
            AlgElement e = element_of(full);
            if (!is_nilpotent(e.block_diagonal()))
                throw SignatureError(
                    "signature: trace-form kernel of the radical contains a non-nilpotent element");
            unipotent_coords.push_back(std::move(full));
        }
    }
    sig.unipotent_dim = static_cast<int>(unipotent_coords.size());
    sig.toral_rank = sig.radical_dim - sig.unipotent_dim;

    // Cross-check on an abelian radical: semisimple parts depend linearly on
    // commuting families, so their span must have dimension = toral rank.
    bool radical_abelian = true;
    for (size_t i = 0; i < radical_elems.size() && radical_abelian; ++i)
        for (size_t j = i + 1; j < radical_elems.size(); ++j)
            if (!bracket(radical_elems[i], radical_elems[j]).is_zero()) {
                radical_abelian = false;
                break;
            }
    if (radical_abelian && sig.radical_dim > 0) {
        std::vector<Vec> ss;
        bool all_zero = true;
        for (const auto& e : radical_elems) {
            Mat sp = semisimple_part(e.block_diagonal());
            Vec flat;
            for (int i = 0; i < sp.rows(); ++i)
                for (int j = 0; j < sp.cols(); ++j) flat.push_back(sp.at(i, j));
            for (const auto& x : flat) all_zero = all_zero && is_zero(x);
            ss.push_back(std::move(flat));
        }
        int ss_rank = all_zero ? 0 : span_rank(ss);
        if (ss_rank != sig.toral_rank)
            throw SignatureError("signature: semisimple-part rank " + std::to_string(ss_rank) +
                                 " disagrees with toral rank " + std::to_string(sig.toral_rank));
    }

    // Reductive = trivial unipotent part and central radical.
    sig.reductive = sig.unipotent_dim == 0;
    if (sig.reductive)
        for (const auto& r : radical_elems) {
            for (int j = 0; j < k && sig.reductive; ++j)
                if (!bracket(r, s.basis[j]).is_zero()) sig.reductive = false;
            if (!sig.reductive) break;
        }

    sig.levi = identify_levi(k - sig.radical_dim);
    return sig;
}

}  // namespace fano
