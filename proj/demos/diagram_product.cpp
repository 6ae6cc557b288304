// Multiplies two signed Brauer diagrams read from the command line, e.g.
//   demo_diagram_product "n=2; 1-2:+; 3-4:-" "n=2; 1-2:+; 3-4:+"

#include <iostream>

#include "sbrauer/sbrauer.hpp"

int main(int argc, char** argv) {
  using namespace sbrauer;
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <upper diagram> <lower diagram>\n";
    return 2;
  }
  try {
    auto upper = parse_diagram(argv[1]);
    auto lower = parse_diagram(argv[2]);
    auto product = compose(upper, lower);
    std::cout << "x^" << product.exponent << " * " << format_diagram(product.diagram) << '\n';
    std::cout << render(product.diagram, RenderFormat::Ascii);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
