#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "etri/models.hpp"
#include "etri/representations.hpp"

namespace etri {

/// A model document holds either a sorting model (electre3/electre1) or a
/// Model (E) representation (model_e). Attribute indices in documents are
/// 1-based; rationals are exact decimal or "p/q" strings.
class LoadedModel {
public:
    explicit LoadedModel(SortingModel m) : model_(std::move(m)) {}
    explicit LoadedModel(ModelERepresentation r) : model_(std::move(r)) {}

    bool is_sorting() const { return std::holds_alternative<SortingModel>(model_); }
    const SortingModel& sorting() const { return std::get<SortingModel>(model_); }
    const ModelERepresentation& model_e() const { return std::get<ModelERepresentation>(model_); }

    const ProductSpace& space() const;
    AssignmentFn assignment() const;
    std::vector<std::string> warnings() const;

private:
    std::variant<SortingModel, ModelERepresentation> model_;
};

LoadedModel parse_model_document(const std::string& json_text);
LoadedModel load_model_document(const std::string& path);

std::string model_document(const SortingModel& m);
std::string model_document(const ModelERepresentation& r, const std::string& note = "");

/// Partition CSV: one column per attribute plus a trailing "class" column
/// valued A or U; levels must be numeric; the document must be total over
/// the product of the per-column level sets.
TwofoldPartition parse_partition_csv(std::istream& in);
TwofoldPartition load_partition_csv(const std::string& path);

void write_assignments_csv(std::ostream& out, const ProductSpace& space, const AssignmentFn& assign);
void write_assignments_csv(std::ostream& out, const ProductSpace& space, const AssignmentFn& assign,
                           const std::vector<IndexVector>& rows);
void write_alternatives_csv(std::ostream& out, const ProductSpace& space, const std::vector<Alternative>& rows);

/// Rows of an alternatives CSV (same column layout, no class column).
std::vector<IndexVector> parse_alternatives_csv(std::istream& in, const ProductSpace& space);

}  // namespace etri
