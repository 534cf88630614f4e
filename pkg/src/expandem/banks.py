"""Built-in few-shot exemplar banks for the entity-matched expansion prompts.

Two banks ship with the package, one per source dataset (NQ and TQ). Each
covered entity group holds exactly eight exemplars: a question plus the
hand-expanded answer set demonstrating the format range of that group.
The eight non-numeric minor classes share one OTHER bank; the UNKNOWN bank
(the N/A catch-all) mixes types and also serves ORDINAL, which has no bank
of its own.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entity_types import EntityType
from .errors import MissingBank

EXEMPLARS_PER_TYPE = 8

# Bank keys. OTHER covers NORP, LOC, WORK_OF_ART, FAC, PRODUCT, EVENT, LAW,
# LANGUAGE; UNKNOWN covers N/A and ORDINAL.
_OWN_BANK = {
    EntityType.DATE: "DATE",
    EntityType.CARDINAL: "CARDINAL",
    EntityType.QUANTITY: "QUANTITY",
    EntityType.MONEY: "MONEY",
    EntityType.PERCENT: "PERCENT",
    EntityType.TIME: "TIME",
    EntityType.PERSON: "PERSON",
    EntityType.GPE: "GPE",
    EntityType.ORG: "ORG",
}
_OTHER_TYPES = {
    EntityType.NORP,
    EntityType.LOC,
    EntityType.WORK_OF_ART,
    EntityType.FAC,
    EntityType.PRODUCT,
    EntityType.EVENT,
    EntityType.LAW,
    EntityType.LANGUAGE,
}


@dataclass(frozen=True)
class Exemplar:
    question: str
    expanded_answers: tuple[str, ...]


@dataclass(frozen=True)
class FewShotBank:
    dataset_id: str  # "NQ" | "TQ"
    groups: dict[str, tuple[Exemplar, ...]]

    def key_for(self, entity_type: EntityType) -> str:
        if entity_type in _OWN_BANK:
            return _OWN_BANK[entity_type]
        if entity_type in _OTHER_TYPES:
            return "OTHER"
        return "UNKNOWN"

    def exemplars_for(self, entity_type: EntityType) -> tuple[Exemplar, ...]:
        key = self.key_for(entity_type)
        if key not in self.groups:
            raise MissingBank(entity_type.value)
        return self.groups[key]

    def all_exemplars(self) -> list[Exemplar]:
        out: list[Exemplar] = []
        for key in sorted(self.groups):
            out.extend(self.groups[key])
        return out


def _ex(question: str, answers: str) -> Exemplar:
    return Exemplar(question, tuple(a.strip() for a in answers.split("/") if a.strip()))


NQ_BANK = FewShotBank(
    "NQ",
    {
        "DATE": (
            _ex("when was ye rishta kya kehlata hai started",
                "January 12, 2009/Jan 2009/2009/Jan 12, 2009/Jan 12th, 2009/January 2009/12th January 2009/12 January, 2009"),
            _ex("when is sharknado 6 going to be released",
                "August 19, 2018/2018/August 2018/Aug 2018/August 19th, 2018/19 August 2018/19 Aug 2018"),
            _ex("when was the last time tampa bay was hit by a hurricane?",
                "1921/1920s/early 1920s/in early 1920s/Oct 1921/October 1921"),
            _ex("when did mutiny on the bounty take place?",
                "28 April 1789/1789/April 1789/Apr 1789/April 28th, 1789/April 28, 1789/28th April, 1789/late 1700s"),
            _ex("game of thrones season 7 release date wiki",
                "July 16, 2017/July 16th, 2017/2017/July 2017/Jul 2017/Jul 16 2017"),
            _ex("On what date did India gain its independence?",
                "15 August 1947/1947/Aug 1947/August 1947/August 15 1947/August 15th 1947/Aug 15, 1947"),
            _ex("When did De Braose die?", "1211/early 1200s"),
            _ex("when did the tv show star trek start?",
                "September 8, 1966/September 8th, 1966/1966/Sep 8, 1966/Sep 8th, 1966/September, 1966/Sep, 1966"),
        ),
        "CARDINAL": (
            _ex("How many physicians did Namibia have in 2002?",
                "598/almost 600/approximately 600/five hundred ninety eight/approx. 600/almost 600"),
            _ex("what's the population of fargo north dakota",
                "120,762/one hundred twenty thousand, seven hundred sixty-two/about 120,000/120762/about one hudred twenty thousand"),
            _ex("How many miles long is Metrorail?",
                "24.4/24.4 miles/24.4 miles long/about 24 miles/approximately 24 miles/24.4 mi"),
            _ex("how many times chennai super kings win in ipl",
                "91/ninety-one/91 times/ninety-one times/over 90 times"),
            _ex("How many of the Roman military were involved in the Battle of Allia River?",
                "15,000 troops/fifteen thousands/fifteen thousands troops/15000/15,000/About 15,000"),
            _ex("What is the highest street number in the Bronx?",
                "263/two hundreds sixty-three"),
            _ex("how many cards are in the game loteria",
                "54/fifty-four/fifty-four cards/54 cards/54 in total"),
            _ex("How many died trying to defend the province in Kaliningrad?",
                "300,000/three hundred thousands/about 300,000/approximately 300,000/300000"),
        ),
        "QUANTITY": (
            _ex("How tall was Napoleon in centimeters?",
                "168 cm/1.68m/1.68 m/1.68 meters/168 centimeters/5.5 inches/5ft 6 inches/5ft 6 in/5feet 6 in/5feet 6 inches"),
            _ex("How tall was John?", "5 ft 5 in/5 feet 5 inches/165cm/1.65m/1.65 meters"),
            _ex("How large is Lafayette Park?",
                "78-acre/seventy-eight acre/about 80 acres/approximately 80 acres"),
            _ex("What is the range of average elevation in the Sichuan Basin?",
                "2,000 to 3,500 meters/2km to 3.5km"),
            _ex("how fast can sound travel in a second",
                "331.2 metres/approximately 331.2 meters/approximately 331.2 m/1,086 feet/1,086 feet per second/approximately 330 meters per second"),
            _ex("During daytime how high can the temperatures reach?",
                "80 °C (176 °F)/80 degrees Celcius/80°C/80 °C/176 °F/176 degrees Fahrenheit"),
            _ex("how far is beaumont texas from the ocean",
                "30 miles/30 mi/thirty miles/30 miles away/about 30 miles"),
            _ex("How fast was the processor on the new Macintosh llfx?",
                "40 MHz/40 Mega-Hz/40 MegaHertz/forty MHz/40 MHz fast"),
        ),
        "MONEY": (
            _ex("How much in deposits did account holders withdraw from IndyMac in late June 2008?",
                "$1.55 billion/1.55 billion dollars/approximately $1.6 billion/around $1.6 billion/approximately 1.6 billion dollars"),
            _ex("How much revenue did Apple announce for Q2 2007?",
                "$5.2 billion/5.2 billion dollars/approximately $5 billion/approximately $5.2 billion"),
            _ex("how much did the new tappan zee bridge cost",
                "$3.9 billion/3.9 billion dollars/approximately $4 billion"),
            _ex("how much money does the iditarod winner get",
                "$69,000/69,000 dollars/about $70,000"),
            _ex("In 2014, how much research funding did Northwestern receive?",
                "$550 million/550 million dollars/about $550 million"),
            _ex("how much interest does the uk pay on its national debt",
                "PS43 billion/£43 billion/43 billion pounds/forty-three billion pounds"),
            _ex("What was reportedly the high value of of loot that the Ganj-i-Sawai had?",
                "£600,000/600,000 pounds/approximately 600,000 pounds/approximately £600,000/about £600,000"),
            _ex("What was the price tag for the private jet Schwarzenegger bought in 1997?",
                "$38 million/38 million dollars/about $38 million"),
        ),
        "PERCENT": (
            _ex("Today, Mexico accounts for what percentage of Mennonites in Latin America?",
                "42%/42 percents/forty-two percent/about 42%"),
            _ex("who owns 50 percent of the worlds wealth",
                "the top 1%/top 1%/1%/one percent/the top one percent"),
            _ex("how much of the world's maple syrup does canada produce",
                "80 percent/80%/around 80%/four-fifth"),
            _ex("what is the alcohol content of red stripe beer",
                "4.7%/about 4.7%/about 5%/approximately 5%"),
            _ex("how much of canada's gdp is oil", "2.9%/almost 3%/about 3%"),
            _ex("What percentage of Australia's cotton crop was GM in 2009?",
                "95%/95 percent/ninety-five percent/around 95%/almost 95%"),
            _ex("what is the highest unemployment rate ever in the united states",
                "25%/one quarter/almost one quarter/almost 25%/25 percent"),
            _ex("How many women at BYU do missionary work?",
                "33 percent/33%/one-third/about one-third/more than 30%"),
        ),
        "TIME": (
            _ex("how long is the movie son of god",
                "138 minutes/2hrs and 18 mins/2hrs and 18 minutes/about 140 mins/138 mins"),
            _ex("how long is the all i have show",
                "two hours/2 hrs/2 hours/two hrs/120 minutes/120 mins"),
            _ex("how long is a wwe nxt live event",
                "50-51 minutes/about 50 mins/between 50-51 minutes long/almost 51 mins long"),
            _ex("what is the running time of the last jedi",
                "152 minutes/2 hrs 32 mins/2 hours 32 minutes/152 mins/about 2.5 hrs/about 2.5 hours"),
            _ex("when is the show this is us on tv", "9pm/nine o'clock/at 9 o'clock/21:00"),
            _ex("when does a baby take their first breath",
                "about 10 seconds after delivery/10 seconds/10 secs/about 10 secs"),
            _ex("how long is an episode of once upon a time",
                "43 minutes/43 mins/almost 45 minutes/forty-three mins/forty-three minutes"),
            _ex("How long before wake time is the lowest temperature reached?",
                "two hours/2 hours/2 hrs/two hrs/about 2 hours before"),
        ),
        "PERSON": (
            _ex("who plays the bad guy in fifth element",
                "Gary Oldman/Gary L. Oldman/Gary Leonard Oldman/Gary/Oldman"),
            _ex("who does tess end up with on mcleods daughters", "Nick/Ryan/Nick Ryan"),
            _ex("who played mario in the super mario movie",
                "Bob Hoskins/Hoskins/Robert Hoskins/Robert William Hoskins/Robert W. Hoskins"),
            _ex("who holds the record for eating hot dogs",
                'Takeru Kobayashi/Kobayashi/Takeru "Tsunami" Kobayashi/Kobayashi Takeru'),
            _ex("who has played chad dimera on days of our lives",
                "Billy Flynn/Casey Jon Deidrick/William Flynn/Casey Deidrick/Casey J. Deidrick"),
            _ex("who ran the fastest 40 time in nfl history",
                'Bo Jackson/Vincent Edward "Bo" Jackson/Jackson'),
            _ex("who does vin diesel play in fast and furious 6",
                'Dominic Toretto/Torreto/Dominic "Dom" Toretto'),
            _ex("who played hey girl on have gun will travel", "Lisa Lu/Lisa Lu Yan/Lu"),
        ),
        "GPE": (
            _ex("town replaced by kampala as ugandan capital in 1962",
                "Entebbe/Entebbe, Uganda"),
            _ex("which is the largest forest state in india",
                "Madhya Pradesh/Madhya Pradesh, India"),
            _ex("ranchi is capital of which state in india", "Jharkhand/Jharkhand, India"),
            _ex("where did kate and prince william get engaged",
                "Kenya/Rutundu, Kenya/Rutundu/East Africa"),
            _ex("where does tv show private eyes take place",
                "Toronto/Toronto, Canada/Toronto, Ontario/Ontario/Toronto, Ontario, Canada"),
            _ex("where is the netflix show the travelers filmed",
                "Vancouver, BC, Canada/Vancouver, BC/Vancouver, Canada/Canada/BC, Canada/Vancouver"),
            _ex("where is rhodochrosite found in the united states",
                "Colorado/Colorado, USA/Colorado, United States/Colorado state"),
            _ex("where was the ncaa football championship game played 2018",
                "Atlanta, Georgia/Georgia/Mercedes-Benz Stadium/Mercedes-Benz Stadium in Atlanta, Georgia/Atlanta"),
        ),
        "ORG": (
            _ex("who has the most world series wins in mlb history", "New York Yankees/Yankees"),
            _ex("who did the vikings play in their first playoff game",
                "Atlanta/Atlanta Falcons/Falcons"),
            _ex("who was the publisher of brave new world",
                "Chatto & Windus/Chatto and Windus/Chatto&Windus"),
            _ex("who makes the fastest car in the world",
                "Bugatti/Bugatti automobiles/Bugatti automobiles S.A.S."),
            _ex("where can you find naruto shippuden in english",
                "Neon Alley/on Neon Alley/in Neon Alley"),
            _ex("where is nanny mcphee and the big bang filmed",
                "University of London/Dunsfold Aerodrome/various London roads/Hambleden in Buckinghamshire/London/UK/Buckinghamshire"),
            _ex("who has the most shops in the uk", "Tesco/Tesco plc"),
            _ex("where does the majority of new york city's drinking water come from",
                "The Delaware Aqueduct/The Catskill Aqueduct/Catskill/Delaware"),
        ),
        "OTHER": (
            _ex("where does the word coffee originally come from", "the Arabic qahwah/Arabic"),
            _ex("where can united states citizens find their civil liberties listed",
                "Bill of Rights/in Bill of Rights"),
            _ex("when was the salary cap introduced to the nhl",
                "During the Great Depression/Great Depression"),
            _ex("what kind of car does jay gatsby drive",
                "Rolls Royce/Rolls-Royce/Rolls-Royce 40"),
            _ex("elton john's first number one hit song", '"Crocodile Rock"/Crocodile Rock'),
            _ex("where does easy jet fly from in uk",
                "London Luton Airport/Luton Airport/London Luton"),
            _ex("what is the prison island in san francisco bay",
                "Alcatraz Island/Island Alcatraz"),
            _ex("what is the architectural style of the hagia sophia",
                "Byzantine/Byzantine empire"),
        ),
        "UNKNOWN": (
            _ex("where did lucy jones come in the eurovision 2017",
                "15th place/15th/fifteenth/fifteenth place"),
            _ex("How many physicians did Namibia have in 2002?",
                "598/almost 600/approximately 600/five hundred ninety eight/approx. 600/almost 600"),
            _ex("how much of canada's gdp is oil", "2.9%/almost 3%/about 3%"),
            _ex("How tall was John?", "5 ft 5 in/5 feet 5 inches/165cm/1.65m/1.65 meters"),
            _ex("how much money does the iditarod winner get",
                "$69,000/69,000 dollars/about $70,000"),
            _ex("who was the publisher of brave new world",
                "Chatto & Windus/Chatto and Windus/Chatto&Windus"),
            _ex("where did kate and prince william get engaged",
                "Kenya/Rutundu, Kenya/Rutundu/East Africa"),
            _ex("On what date did India gain its independence?",
                "15 August 1947/1947/Aug 1947/August 1947/August 15 1947/August 15th 1947/Aug 15, 1947"),
        ),
    },
)

TQ_BANK = FewShotBank(
    "TQ",
    {
        "DATE": (
            _ex("The first Transit of Venus in the 21st century took place on 8 June 2004. "
                "What is the date of the next one?",
                "June 2012/2012 June 06/2012/June 6th, 2012/6 June 2012"),
            _ex("Forefathers Day is celebrated in the US on which date?",
                "21 December/21th, December/December 21/Dec 21/December 21th"),
            _ex("In what year did Roald Amundsen reach the South Pole for the first time?",
                "1911/14 December 1911/December 1911/December 14th, 1911/Dec 14th, 1911"),
            _ex("State of Israel is proclaimed.",
                "1948/May 14, 1948/May, 1948/May 14th, 1948/14 May 1948"),
            _ex("An eruption in Iceland, known as the Laki eruption, where lava erupted from a "
                "17-mile crack rather than from a standard volcano and lava tubes extended lava "
                "travel to more than 50 miles, devastated the country killing 80% of livestock, "
                "caused starvation for over 20% of the population, and affected areas as far as "
                "Africa and Asia. When was this?",
                "1783-4/1783-1784/from 1783 to 1784"),
            _ex("In what year did 'Prohibition' officially end in America?",
                "1933/December 5, 1933/Dec 5, 1933/December of 1933/December 5th, 1933"),
            _ex("Which date is Groundhog Day in the USA?",
                "February 2nd/Feb 2nd/February 2/Feb 2"),
            _ex("In which year was 'The Boston Tea Party'?",
                "1773/December 16, 1773/December 1773/Dec 1773/Dec 16th, 1773/16 December 1773"),
        ),
        "CARDINAL": (
            _ex("How many kilometres long is the walk - the longest race in men's athletics?",
                "50/50km/fifty/fifty-kilometres"),
            _ex('"How many leagues did Captain Nemo travel ""under the sea""?"',
                "20,000/20000/twenty thousand/twenty thousand leagues"),
            _ex("What is the maximum number of characters in a single SMS (text) message?",
                "160/160 characters/one hundred sixty"),
            _ex("To the nearest 1000, what is the crowd capacity on Centre Court at Wimbiedon?",
                "15,000/approximately 15,000/around 15,000/14,979/fifteen-thousands"),
            _ex("It's census time again. How many people did the US have in 1790 when the first "
                "census was taken?",
                "4 million. 3,929,326, to be exact/3,929,326/around 4 million/4 million/almost 4,000,000"),
            _ex("On a standard dartboard, which number lies opposite 6?", "11/eleven"),
            _ex("In the Washington Irving short story, for how many years did Rip van Winkle "
                "sleep in the Catskill Mountains?",
                "Twenty/20/Twenty years/20 year"),
            _ex("How long, to the nearest mile, is an Olympic marathon?",
                "26/twenty six/approximately 26 miles/26 miles"),
        ),
        "QUANTITY": (
            _ex("How tall is the monument 'Nelson's Column' in feet and inches?",
                "170 feet and two inches/170 feet and 2 inches/170 ft 2 in/one-hundred seventy feet and two inches"),
            _ex("At which distance did Sebastian Coe win his Olympic gold medal in the Moscow games",
                "Fifteen hundred metres/1,500 m/1.5km/1.5 kilometres/one point five km"),
            _ex("How long is a volleyball court in feet?", "60 feet/sixty feet"),
            _ex("In the Olympic shot put competition, what is the weight of the women's shot?",
                "4 kilograms (8.82 lb)/4 kg/8.82 lb/4 kilograms/four kilograms/8.82 pounds"),
            _ex("What is the last event in the decathlon",
                "Fifteen hundred metres/1,500 metres/1.5km/0.93 miles/1.5 kilometres"),
            _ex("According to Dart Board Regulations, how high should the centre of the bullseye "
                "be from the floor in feet and inches?",
                "5 feet 8 inches/5 ft 8 in/five feet eight inches"),
            _ex("To a thousand square miles, what is the area of New Jersey?",
                "7,417 square miles/approximately 7,400 square miles/seven-thousands four-hundreds and seventeen square miles"),
            _ex('"In soccer, how far does ""the wall"" of players have to be from the spot where '
                'a free kick is to be taken?"',
                "10 yards/9.144 meters/ten yards/9.144 m/30 feet/30 ft/360 inches"),
        ),
        "MONEY": (
            _ex("If after spending 10% of your money, you have $180 left, how much did you start with?",
                "$200/two-hundred dollars/200 dollars"),
            _ex("How much did Jerry Seinfeld reputedly turn down per episode when he refused to "
                "continue Seinfeld?",
                "$5 million/5,000,000 dollars/five million dollars/$5,000,000"),
            _ex("In dollars, how much did the 1997 film Titanic gross in its opening weekend in America?",
                "$28,638,131/28,638,131 dollars/approximately $29 million/almost $29,000,000"),
            _ex("How much does it cost to buy Trafalgar Square on a monopoly board?",
                "£240/240 pounds/two-hundred forty pounds"),
            _ex("At 2013 what compensation had UK banks paid/set aside for the misselling of PPI "
                "(Payment Protection Insurance)?",
                "£18.4billion/18.4 billion pounds/£18,400,000,000/18,400,000,000 pounds"),
            _ex("It was announced in 2015 that Alexander Hamilton would be replaced on (What?), "
                "also called a sawbuck, alluding to the symbol X?",
                "$10 bill/$10/$10 buck/ten bucks/ten dollars"),
            _ex("What does a colour TV licence cost?",
                "£145.50/145.50 pounds/approximately £145/almost £146"),
            _ex("In dollars, how much did the USA pay Russia for Alaskan territory in 1867?",
                "$7,200,000/$7.2 million/7.2 million dollars/7,200,000"),
        ),
        "PERCENT": (
            _ex("An Ipsos MORI survey carried out this year showed politicians to have the lowest "
                "level of trust of any occupation in the U.K. What percentage of people trusted "
                "politicians in general to tell the truth. ( accept within + or - 5 % ) ?",
                "18%/eighteen percents/around 20%/over 15%"),
            _ex("(Up to) what degree of Neanderthal DNA is found in modern non-African people?",
                "4%/four percents/4 percents/four/up to 4%"),
            _ex("In the United States, if liquor is defined as 80 proof, what is the percentage "
                "of alcohol by volume?",
                "40%/fourty percents/40 percents/40/two-fifth"),
            _ex("Seas and oceans make up roughly what proportion of the earth's surface?",
                "70%/seventy percents/approximately 70%/around 70%"),
            _ex("Twelve three-hundredths (12/300) expresssed as a percentage is?",
                "4%/four/4/four percent/one twenty-fifth"),
            _ex("What percentage of all Rolls-Royce Motor cars ever built are still roadworthy?",
                "Over 60%/Over three-fifth/Over sixty percent/more than 60%/above 60%"),
            _ex("The human brain represents roughly what percentage of the body's resting "
                "metabolic rate (energy expended)?",
                "20%/one-fifth/twenty percent/approximately 20%"),
            _ex("Approximately what percentage of Americans have appeared on television? 3%, 11% or 25%?",
                "25%/one quarter/twenty-five percent/approximately 25%"),
        ),
        "TIME": (
            _ex("How long is the rest period between rounds in a professional boxing match?",
                "60 seconds (one minute)/60 seconds/60 secs/one minute/one min./sixty seconds"),
            _ex("How long is a dog watch at sea?",
                "Two hours/2 hrs/2 hours/120 mins/120 minutes"),
            _ex("A snowflake takes approximately how long to fall fom sky to ground?",
                "One hour/1 hours/approximately 1 hours/60 minutes/60 min"),
            _ex("How long does a golfer get to find a lost ball",
                "Five minutes/5 minutes/5 mins/five mins"),
            _ex("How long is allowed between serves in an APT tennis match i.e. between 1st and 2nd serve?",
                "20 SECONDS/twenty seconds/20 secs/20 seconds"),
            _ex("At what time of the day is the Ceremony of the Keys held in the Tower of London?",
                "10pm/ten p.m./10 p.m./ten at night/10 at night"),
            _ex("Takuo Toda broke the world record for a paper plane flight, launched by hand "
                "from the ground, for what time?",
                "26.1 seconds/around 26 seconds/approximately 26 secs/26.1 secs"),
            _ex("Because of the speed at which the earth and the moon move relative to the sun, "
                "a total solar eclipse can never last more than how long?",
                "7 minutes 31 seconds/seven minutes thirty-one seconds/7 mins 31 secs/about 7.5 minutes"),
        ),
        "PERSON": (
            _ex("Which French chef created Peach Melba in 1893?",
                "Auguste Escoffier/chef Auguste Escoffier/Georges Auguste Escoffier/Auguste/Escoffier"),
            _ex("Who managed England during the 1982 World Cup?",
                "RON GREENWOOD/Ronald Greenwood/Greenwood"),
            _ex("Donald Pleasance, Telly Savalas and Charles Gray have all played the role of "
                "which James Bond villain?",
                "Ernst Blofeld/Ernst S. Blofeld/Blofeld/Ernest"),
            _ex("What television host is married to Portia de Rossi?",
                "Ellen Degeneres/Ellen Lee Degeneres/Ellen L. Degeneres/Ellen"),
            _ex("Which World Heavyweight boxing champion-was known as 'The Cinderella Man'?",
                "JAMES BRADDOCK/JAMES J. BRADDOCK/James Walter Braddock"),
            _ex("In 1994 who became only the second actor to win successive Best Actor ‘Oscars’?",
                "Tom Hanks/Tom Jeffrey Hanks/Tom J. Hanks/Thomas Jeffrey Hanks/Thomas J. Hanks"),
            _ex("Who was William Shakespeare's mother", "Mary Arden/Mary Shakespeare/Mary"),
            _ex("What is the name of the top fashion designer who founder of the Fashion and "
                "Textile Museum in London?",
                "Zandra Rhodes/Dame Zandra Lindsey Rhodes/Zandra Lindsey Rhodes/Zandra L. Rhodes"),
        ),
        "GPE": (
            _ex("What is the capital of Namibia?", "Windhoek/Windhoek, Namibia"),
            _ex("Where was the first commercial railway line built?",
                "Stockton to Darlington, UK/UK/Stockton, UK/Darlington, UK"),
            _ex("What is the Capital City of Latvia?", "Riga/Riga, Latvia"),
            _ex("Which country has the same name as a state of the USA?",
                "Western Georgia/Georgia"),
            _ex("In which Winter Olympics city did John Curry win gold in 1976?",
                "Innsbrück/InnsbruckInnsbruck, Austria"),
            _ex("By area, which is the largest state in the USA?",
                "Alaska/Alaska, United States/Alaska, USA"),
            _ex("Previously called Ezo/Yezo/Yeso/Yesso, what is Japan's north and second-largest island?",
                "Hokkaidou prefecture/Hokkaidou/Hokkaidou island"),
            _ex("The St Leger is run at which English racecourse?", "Doncaster, England/Doncaster"),
        ),
        "ORG": (
            _ex("What organization won the 2012 Nobel Peace Prize?", "The European Union/EU"),
            _ex("What is the name of the bank in the UK television series ‘Dad’s Army’?",
                "Swallow Bank/Mainwaring's Bank"),
            _ex("Which car company made the Interceptor, ceasing production in 1976?",
                "JENSEN/JENSEN Motors"),
            _ex("Sam Walton founded which famous US retail chain in 1962?", "Walmart"),
            _ex("The original motto of which organisation was ‘Amidst War, Charity’?",
                "Red Cross/International Committee of the Red Cross/ICRC"),
            _ex("What magazine, with its iconic yellow border, was first published on Sept 22, 1888?",
                "National Geographic/National Geographic magazine"),
            _ex("Sony and Emirates Airlines withdrew their sponsorship in 2014 from which global "
                "organization after ongoing corruption scandals?",
                "FIFA/Fédération Internationale de Football Association/FIFA (Fédération Internationale de Football Association)"),
            _ex("'Core' is a brand of which computer technology company?", "Intel Corporation/Intel"),
        ),
        "OTHER": (
            _ex("The vast majority of Indonesian people adhere to what religion?", "Islam/Islamic"),
            _ex("The island of Feurteventura lies in which body of water?", "Atlantic Ocean/Atlantic"),
            _ex("Which is the longest running Broadway musical in history?",
                "Phantom of the Opera/The Phantom of the Opera"),
            _ex("What is the world’s largest natural harbour?", "Sydney Harbour/Sydney Harbour"),
            _ex("In World War Two, which aircraft company manufactured the Stuka?",
                "Junkers/the junkers aircraft company"),
            _ex("What was first framed in 1864 and ratified in 1906 concerning the conduct of warfare?",
                "Geneva Convention"),
            _ex("What was the first US Federal statute to limit cartels and monopolies, passed "
                "in 1890, that still forms the basis for most antitrust litigation by the United "
                "States federal government?",
                "The Sherman Act"),
            _ex("Herbert Hoover and his wife Lou Henry Hoover often had public conversations in "
                "which language so that people could not eavesdrop on them?",
                "Mandarin Chinese/Mandarin"),
        ),
        "UNKNOWN": (
            _ex("The2012 London Olympic Games were officially known as the games of what number Olympiad?",
                "30th/thirtieth/30/thirty"),
            _ex("How many kilometres long is the walk - the longest race in men's athletics?",
                "50/50km/fifty/fifty-kilometres"),
            _ex("Twelve three-hundredths (12/300) expresssed as a percentage is?",
                "4%/four/4/four percent/one twenty-fifth"),
            _ex("At which distance did Sebastian Coe win his Olympic gold medal in the Moscow games",
                "Fifteen hundred metres/1,500 m/1.5km/1.5 kilometres/one point five km"),
            _ex("How much does it cost to buy Trafalgar Square on a monopoly board?",
                "£240/240 pounds/two-hundred forty pounds"),
            _ex("Which car company made the Interceptor, ceasing production in 1976?",
                "JENSEN/JENSEN Motors"),
            _ex("Which country has the same name as a state of the USA?",
                "Western Georgia/Georgia"),
            _ex("In what year did 'Prohibition' officially end in America?",
                "1933/December 5, 1933/Dec 5, 1933/December of 1933/December 5th, 1933"),
        ),
    },
)

BANKS = {"NQ": NQ_BANK, "TQ": TQ_BANK}


def get_bank(dataset_id: str) -> FewShotBank:
    key = dataset_id.strip().upper()
    if key not in BANKS:
        raise KeyError(f"no built-in bank named {dataset_id!r} (have: {sorted(BANKS)})")
    return BANKS[key]
