#include "hstrata/document.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"

namespace hstrata {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw DocumentError(msg); }

QQ::Elem parse_rational(const ordered_json& v, int row, int col) {
  using boost::multiprecision::cpp_int;
  if (v.is_number_integer()) return QQ::Elem(v.get<std::int64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return QQ::Elem(cpp_int(s));
      cpp_int num(s.substr(0, slash));
      cpp_int den(s.substr(slash + 1));
      if (den == 0) fail("forms[" + std::to_string(row) + "][" + std::to_string(col) +
                         "] has zero denominator");
      return QQ::Elem(num, den);
    } catch (const DocumentError&) {
      throw;
    } catch (const std::exception&) {
      fail("forms[" + std::to_string(row) + "][" + std::to_string(col) +
           "] is not a valid rational \"num/den\" string");
    }
  }
  fail("forms[" + std::to_string(row) + "][" + std::to_string(col) +
       "] must be an integer or a \"num/den\" string");
}

std::string rational_to_string(const QQ::Elem& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace

int FormSpaceDocument::d() const { return static_cast<int>(raw_rows_.size()); }

const FormSpace<GF>& FormSpaceDocument::gf_space() const {
  if (gf_.empty()) throw std::logic_error("document is not in modular mode");
  return gf_.front();
}

const FormSpace<QQ>& FormSpaceDocument::qq_space() const {
  if (qq_.empty()) throw std::logic_error("document is not in rational mode");
  return qq_.front();
}

FormSpaceDocument FormSpaceDocument::parse(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

FormSpaceDocument FormSpaceDocument::parse_string(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail("input is not valid JSON");
  if (!doc.is_object()) fail("top level must be a JSON object");
  if (!doc.contains("field") || !doc.contains("j") || !doc.contains("forms"))
    fail("document requires the keys \"field\", \"j\" and \"forms\"");

  FormSpaceDocument out;
  const auto& field = doc["field"];
  if (field.is_string() && field.get<std::string>() == "rational") {
    out.modular_ = false;
  } else if (field.is_object() && field.contains("prime") &&
             field["prime"].is_number_unsigned()) {
    out.modular_ = true;
    out.prime_ = field["prime"].get<std::uint64_t>();
  } else {
    fail("\"field\" must be \"rational\" or {\"prime\": p}");
  }

  if (!doc["j"].is_number_integer() || doc["j"].get<std::int64_t>() < 0)
    fail("\"j\" must be a nonnegative integer");
  out.j_ = doc["j"].get<int>();

  const auto& forms = doc["forms"];
  if (!forms.is_array() || forms.empty()) fail("\"forms\" must be a nonempty array");
  const int width = out.j_ + 1;
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (!forms[r].is_array() || static_cast<int>(forms[r].size()) != width)
      fail("forms[" + std::to_string(r) + "] has length " +
           std::to_string(forms[r].is_array() ? forms[r].size() : 0) + ", expected " +
           std::to_string(width));
  }

  if (out.modular_) {
    GF k = [&]() -> GF {
      try {
        return GF(out.prime_);
      } catch (const std::invalid_argument& e) {
        fail(std::string("bad field: ") + e.what());
      }
    }();
    std::vector<BinaryForm<GF>> rows;
    for (std::size_t r = 0; r < forms.size(); ++r) {
      BinaryForm<GF> f(k, out.j_);
      std::vector<std::string> echo;
      for (int c = 0; c < width; ++c) {
        const auto& v = forms[r][static_cast<std::size_t>(c)];
        if (!v.is_number_integer())
          fail("forms[" + std::to_string(r) + "][" + std::to_string(c) +
               "] must be an integer in modular mode");
        f.coeff(c) = k.from_int(v.get<std::int64_t>());
        echo.push_back(std::to_string(f.coeff(c)));
      }
      rows.push_back(std::move(f));
      out.raw_rows_.push_back(std::move(echo));

      auto space = FormSpace<GF>::from_rows(k, out.j_, rows);
      if (space.dim() != static_cast<int>(rows.size()))
        fail("forms[" + std::to_string(r) + "] is linearly dependent on earlier rows");
    }
    out.gf_.push_back(FormSpace<GF>::from_rows(k, out.j_, rows));
  } else {
    QQ q;
    std::vector<BinaryForm<QQ>> rows;
    for (std::size_t r = 0; r < forms.size(); ++r) {
      BinaryForm<QQ> f(q, out.j_);
      std::vector<std::string> echo;
      for (int c = 0; c < width; ++c) {
        f.coeff(c) = parse_rational(forms[r][static_cast<std::size_t>(c)],
                                    static_cast<int>(r), c);
        echo.push_back(rational_to_string(f.coeff(c)));
      }
      rows.push_back(std::move(f));
      out.raw_rows_.push_back(std::move(echo));

      auto space = FormSpace<QQ>::from_rows(q, out.j_, rows);
      if (space.dim() != static_cast<int>(rows.size()))
        fail("forms[" + std::to_string(r) + "] is linearly dependent on earlier rows");
    }
    out.qq_.push_back(FormSpace<QQ>::from_rows(q, out.j_, rows));
  }
  return out;
}

FormSpaceDocument FormSpaceDocument::from_space(const FormSpace<GF>& v) {
  FormSpaceDocument out;
  out.modular_ = true;
  out.prime_ = v.field().prime();
  out.j_ = v.j();
  out.gf_.push_back(v);
  for (int r = 0; r < v.dim(); ++r) {
    std::vector<std::string> echo;
    for (int c = 0; c <= v.j(); ++c) echo.push_back(std::to_string(v.basis().at(r, c)));
    out.raw_rows_.push_back(std::move(echo));
  }
  return out;
}

FormSpaceDocument FormSpaceDocument::from_space(const FormSpace<QQ>& v) {
  FormSpaceDocument out;
  out.modular_ = false;
  out.j_ = v.j();
  out.qq_.push_back(v);
  for (int r = 0; r < v.dim(); ++r) {
    std::vector<std::string> echo;
    for (int c = 0; c <= v.j(); ++c) echo.push_back(rational_to_string(v.basis().at(r, c)));
    out.raw_rows_.push_back(std::move(echo));
  }
  return out;
}

std::string FormSpaceDocument::serialize() const {
  ordered_json doc;
  if (modular_) {
    doc["field"] = ordered_json{{"prime", prime_}};
  } else {
    doc["field"] = "rational";
  }
  doc["j"] = j_;
  ordered_json rows = ordered_json::array();
  if (modular_) {
    const auto& v = gf_.front();
    for (int r = 0; r < v.dim(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c <= j_; ++c) row.push_back(v.basis().at(r, c));
      rows.push_back(std::move(row));
    }
  } else {
    const auto& v = qq_.front();
    for (int r = 0; r < v.dim(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c <= j_; ++c) row.push_back(rational_to_string(v.basis().at(r, c)));
      rows.push_back(std::move(row));
    }
  }
  doc["forms"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace hstrata
