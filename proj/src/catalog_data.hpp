#ifndef SGFORGE_SRC_CATALOG_DATA_HPP_
#define SGFORGE_SRC_CATALOG_DATA_HPP_

// Contents of the files in data/, embedded at build time.
namespace sgforge::detail {
  extern char const* const tables_json;
  extern char const* const bases_txt;
  extern char const* const exclusions_txt;
  extern char const* const conditions_txt;
}  // namespace sgforge::detail

#endif  // SGFORGE_SRC_CATALOG_DATA_HPP_
