#include "hyperpsi/digamma.hpp"

namespace hyperpsi {

// Fractional digits of the Euler-Mascheroni constant (1050 places).
const std::string_view kEulerGammaDigits =
    "5772156649015328606065120900824024310421593359399235988057672348848677"
    "2677766467093694706329174674951463144724980708248096050401448654283622"
    "4173997644923536253500333742937337737673942792595258247094916008735203"
    "9481656708532331517766115286211995015079847937450857057400299213547861"
    "4669402960432542151905877553526733139925401296742051375413954911168510"
    "2807984234877587205038431093997361372553060889331267600172479537836759"
    "2713515772261027349291394079843010341777177808815495706610750101619166"
    "3340152278935867965497252036212879226555953669628176388792726801324310"
    "1047650596370394739495763890657296792960100901512519595092224350140934"
    "9871228247949747195646976318506676129063811051824197444867836380861749"
    "4551698927923018773910729457815543160050021828440960537724342032854783"
    "6701517739439870030237033951832869000155819398804270741154222781971652"
    "3011073565833967348717650491941812300040654693142999297779569303100503"
    "0863034185698032310836916400258929708909854868257773642882539549258736"
    "2959613329857473930237343884707037028441292016641785024873337908056275";

}  // namespace hyperpsi
