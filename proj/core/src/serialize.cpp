#include "ldic/serialize.hpp"

#include "ldic/errors.hpp"

#include <json.hpp>

namespace ldic {

using ordered_json = nlohmann::ordered_json;

std::string code_to_json(const IndexCode& code) {
  ordered_json doc;
  doc["q"] = code.q();
  doc["M"] = code.message_length();
  doc["N"] = code.receivers();
  doc["ell"] = code.length();
  doc["L"] = code.encoder().entries();
  doc["queries"] = code.all_queries();
  return doc.dump() + "\n";
}

IndexCode code_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid code JSON: ") + e.what());
  }
  try {
    const auto q = doc.at("q").get<std::uint32_t>();
    const int M = doc.at("M").get<int>();
    const int N = doc.at("N").get<int>();
    const int ell = doc.at("ell").get<int>();
    if (M < 1 || N < 1 || ell < 0) {
      throw StructuralError("code JSON needs M >= 1, N >= 1, ell >= 0");
    }
    const auto entries = doc.at("L").get<std::vector<Elem>>();
    auto queries = doc.at("queries").get<std::vector<IndexSet>>();
    PrimeField field = [&] {
      try {
        return PrimeField(q);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }();
    FqMatrix encoder(field, static_cast<std::size_t>(M) * static_cast<std::size_t>(N),
                     static_cast<std::size_t>(ell), entries);
    return IndexCode(M, N, std::move(encoder), std::move(queries));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid code JSON: ") + e.what());
  }
}

std::string fitting_matrix_to_json(const FittingMatrix& a) {
  ordered_json doc;
  doc["q"] = a.matrix.field().q();
  doc["N"] = a.matrix.rows();
  doc["rank"] = a.rank();
  doc["A"] = a.matrix.entries();
  return doc.dump() + "\n";
}

} // namespace ldic
