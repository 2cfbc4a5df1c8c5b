#!/usr/bin/env python3
# tools/make_fixture.py

# Copyright 2026 The LAUG Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.

"""Writes data/fixture_corpus.json (60 dialogs, 200 user turns) and
data/mini_corpus.json (5 dialogs) in the native corpus format.

Usage: tools/make_fixture.py [--out-dir data] [--seed 2026]
"""

import argparse
import json
import os
import random

VALUES = {
    "train-dest": ["Cambridge", "London Kings Cross", "Norwich", "Ely", "Stansted Airport",
                   "Peterborough", "Leicester", "Birmingham New Street", "Stevenage", "Kings Lynn"],
    "train-depart": ["Cambridge", "London Liverpool Street", "Norwich", "Ely", "Peterborough",
                     "Leicester", "Broxbourne", "Bishops Stortford", "Stevenage"],
    "train-arrive": ["09:15", "10:30", "11:45", "13:45", "15:00", "17:30", "18:15", "20:45"],
    "train-leave": ["08:00", "09:30", "12:15", "14:00", "16:45", "19:30", "21:00"],
    "train-day": ["monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"],
    "train-people": ["1", "2", "3", "4", "5", "6", "8"],
    "hotel-name": ["Acorn Guest House", "Ashley Hotel", "Hamilton Lodge", "Gonville Hotel",
                   "Lovell Lodge", "Cityroomz", "Alexander Bed and Breakfast", "Archway House"],
    "hotel-area": ["centre", "north", "south", "east", "west"],
    "hotel-pricerange": ["cheap", "moderate", "expensive"],
    "hotel-stars": ["2", "3", "4", "5"],
    "hotel-stay": ["2", "3", "4", "5"],
    "hotel-day": ["monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"],
    "hotel-people": ["1", "2", "3", "4", "6"],
    "restaurant-food": ["italian", "chinese", "indian", "british", "european", "thai", "french",
                        "gastropub", "mediterranean", "korean"],
    "restaurant-area": ["centre", "north", "south", "east", "west"],
    "restaurant-pricerange": ["cheap", "moderate", "expensive"],
    "restaurant-name": ["Golden Wok", "Curry Garden", "Midsummer House", "Nandos", "Bedouin",
                        "Meze Bar", "Charlie Chan", "Copper Kettle"],
    "restaurant-time": ["12:00", "12:30", "13:15", "18:00", "18:45", "19:30", "20:15"],
    "restaurant-day": ["monday", "tuesday", "wednesday", "thursday", "friday", "saturday",
                       "sunday"],
    "restaurant-people": ["2", "3", "4", "5", "7"],
    "attraction-name": ["Kings College", "Whipple Museum", "Byard Art", "Cherry Hinton Water Play",
                        "Great Saint Marys Church", "Jesus Green Outdoor Pool", "Scott Polar Museum"],
    "attraction-area": ["centre", "north", "south", "east", "west"],
    "attraction-type": ["museum", "college", "park", "swimming pool", "theatre", "nightclub",
                        "architecture"],
    "taxi-dest": ["Cambridge Station", "Addenbrookes Hospital", "Golden Wok", "Kings College",
                  "Ashley Hotel", "Whipple Museum", "Curry Garden"],
    "taxi-depart": ["Cambridge Station", "Hamilton Lodge", "Nandos", "Byard Art", "Gonville Hotel",
                    "Midsummer House", "Lovell Lodge"],
    "taxi-leave": ["08:15", "10:45", "13:30", "17:00", "19:15", "22:30"],
    "taxi-arrive": ["09:00", "11:15", "14:30", "18:30", "20:00"],
}

# Per-slot phrases. {v} is the value.
PHRASES = {
    "dest": ["to {v}", "going to {v}", "heading to {v}"],
    "depart": ["from {v}", "leaving from {v}", "departing from {v}"],
    "arrive": ["arriving by {v}", "that arrives by {v}", "to arrive by {v}"],
    "leave": ["leaving after {v}", "that leaves after {v}", "departing after {v}"],
    "day": ["on {v}", "for {v}"],
    "people": ["for {v} people", "for {v} of us"],
    "name": ["called {v}", "named {v}"],
    "area": ["in the {v}", "in the {v} of town"],
    "pricerange": ["in the {v} price range", "that is {v}"],
    "stars": ["with {v} stars", "rated {v} stars"],
    "stay": ["for {v} nights", "staying {v} nights"],
    "food": ["serving {v} food", "that serves {v} food"],
    "time": ["at {v}", "for {v}"],
    "type": ["that is a {v}", "like a {v}"],
}

FIRST = {
    "train": ["I need a train", "I am looking for a train", "Can you find me a train",
              "Hi, I want to book a train", "I would like to take a train"],
    "hotel": ["I need a place to stay", "I am looking for a hotel", "Can you find me a hotel",
              "I want to book a guesthouse"],
    "restaurant": ["I am looking for a restaurant", "I want to eat somewhere",
                   "Can you recommend a restaurant", "I need a place to eat"],
    "attraction": ["I want to visit an attraction", "Can you suggest something to see",
                   "I am looking for places to go"],
    "taxi": ["I need a taxi", "Can you book me a taxi", "I want to get a taxi"],
}

FOLLOW = ["I want one", "Yes, I would like one", "It should be", "I would prefer one",
          "Ok, I need it", "I want it"]

REQUEST_NOUN = {
    "price": "price", "duration": "travel time", "trainid": "train ID", "ref": "reference number",
    "phone": "phone number", "addr": "address", "post": "postcode", "fee": "entrance fee",
    "car": "car type",
}
REQUESTS = {
    "train": ["price", "duration", "trainid", "ref"],
    "hotel": ["phone", "addr", "post", "ref"],
    "restaurant": ["phone", "addr", "post", "ref"],
    "attraction": ["phone", "addr", "post", "fee"],
    "taxi": ["car", "phone"],
}
REQUEST_FRAMES = ["Can I get the {n}?", "What is the {n}?", "Could you give me the {n}, please?",
                  "I also need the {n}."]
REQUEST2_FRAMES = ["Can I get the {n} and the {m}?", "What is the {n} and {m}?"]

SLOTS = {
    "train": [["dest"], ["dest", "depart"], ["dest", "day"], ["depart", "dest", "day"],
              ["arrive"], ["leave"], ["day", "leave"], ["people"]],
    "hotel": [["area"], ["pricerange"], ["area", "pricerange"], ["stars"], ["name"],
              ["stay", "day"], ["people", "stay"], ["people", "day"]],
    "restaurant": [["food"], ["food", "area"], ["pricerange", "food"], ["name"], ["area"],
                   ["time", "day"], ["people", "time"], ["people", "day", "time"]],
    "attraction": [["type"], ["type", "area"], ["name"], ["area"]],
    "taxi": [["dest"], ["depart", "dest"], ["leave"], ["arrive"], ["dest", "arrive"]],
}

BOOK_SLOTS = {"people", "stay", "time"}

CLOSINGS = [("Thank you, goodbye.", ["thank", "bye"]), ("Thanks, that is all I need.", ["thank"]),
            ("Great, thank you very much.", ["thank"]), ("Goodbye.", ["bye"]),
            ("That is everything, bye.", ["bye"])]
GREETINGS = ["Hello.", "Hi there."]

SYSTEM = {
    "train": ["I have several trains that match. Where will you be travelling?",
              "There is a train that fits. Shall I book it?",
              "Booking was successful. Anything else?"],
    "hotel": ["I found a few places. Do you have a preference?",
              "That one is available. Would you like me to book it?",
              "Your room is booked. Anything else?"],
    "restaurant": ["There are several restaurants. Any preference on area?",
                   "I can book that for you. How many people?",
                   "Your table is reserved. Anything else?"],
    "attraction": ["There are many attractions. What type are you interested in?",
                   "I recommend that one. It is free to enter.",
                   "Is there anything else I can help with?"],
    "taxi": ["When would you like to leave?", "Your taxi is booked. Anything else?",
             "Where will you be going?"],
}
SYSTEM_END = ["You are welcome. Have a nice day.", "Glad I could help. Goodbye."]


class Builder:
    """Accumulates text pieces and records value spans in code points."""

    def __init__(self):
        self.text = ""
        self.da = []
        self.spans = []

    def add(self, s):
        self.text += s

    def value(self, domain, intent, slot, value):
        item = len(self.da)
        self.da.append({"domain": domain, "intent": intent, "slot": slot, "value": value})
        start = len(self.text)
        self.text += value
        self.spans.append({"item": item, "start": start, "end": len(self.text)})

    def item(self, domain, intent, slot="", value=""):
        self.da.append({"domain": domain, "intent": intent, "slot": slot, "value": value})

    def turn(self):
        return {"speaker": "user", "text": self.text, "da": self.da, "spans": self.spans}


def phrase(b, rng, domain, slot, value):
    p = rng.choice(PHRASES[slot])
    pre, post = p.split("{v}")
    b.add(pre)
    b.value(domain, "inform", slot, value)
    b.add(post)


def inform_turn(rng, domain, first, slots, pick):
    b = Builder()
    b.add(rng.choice(FIRST[domain]) if first else rng.choice(FOLLOW))
    for i, slot in enumerate(slots):
        if i and i == len(slots) - 1 and rng.random() < 0.5:
            b.add(" and")
        b.add(" ")
        phrase(b, rng, domain, slot, pick(domain, slot))
    b.add("?" if b.text.startswith("Can") else rng.choice([".", ".", " please."]))
    return b


def request_turn(rng, domain):
    b = Builder()
    slots = rng.sample(REQUESTS[domain], 2 if rng.random() < 0.3 else 1)
    if len(slots) == 2:
        frame = rng.choice(REQUEST2_FRAMES)
        b.add(frame.format(n=REQUEST_NOUN[slots[0]], m=REQUEST_NOUN[slots[1]]))
    else:
        b.add(rng.choice(REQUEST_FRAMES).format(n=REQUEST_NOUN[slots[0]]))
    for s in slots:
        b.item(domain, "request", s, "?")
    return b


def closing_turn(rng):
    b = Builder()
    text, intents = rng.choice(CLOSINGS)
    b.add(text)
    for i in intents:
        b.item("general", i)
    return b


def make_dialog(rng, idx, split, n_user, pick):
    domains = rng.sample(list(FIRST), 2 if n_user >= 4 and rng.random() < 0.5 else 1)
    turns = []
    plan = []
    per = max(1, (n_user - 1) // len(domains))
    for di, d in enumerate(domains):
        k = per if di < len(domains) - 1 else n_user - 1 - per * (len(domains) - 1)
        for j in range(k):
            plan.append((d, j == 0, "inform" if j == 0 or rng.random() < 0.75 else "request"))
    plan.append((None, False, "close"))
    for d, first, kind in plan:
        if kind == "inform":
            slots = rng.choice(SLOTS[d])
            if first and rng.random() < 0.15:
                b = Builder()
                b.add(rng.choice(GREETINGS) + " ")
                b.item("general", "greet")
                inner = inform_turn(rng, d, True, slots, pick)
                off = len(b.text)
                b.add(inner.text)
                for sp in inner.spans:
                    b.spans.append({"item": sp["item"] + 1, "start": sp["start"] + off,
                                    "end": sp["end"] + off})
                b.da.extend(inner.da)
            else:
                b = inform_turn(rng, d, first, slots, pick)
            if any(s in BOOK_SLOTS for s in slots):
                for item in b.da:
                    if item["slot"] in BOOK_SLOTS:
                        item["intent"] = "book"
            sys_text = rng.choice(SYSTEM[d])
        elif kind == "request":
            b = request_turn(rng, d)
            sys_text = rng.choice(SYSTEM[d])
        else:
            b = closing_turn(rng)
            sys_text = rng.choice(SYSTEM_END)
        turns.append(b.turn())
        turns.append({"speaker": "system", "text": sys_text, "da": [], "spans": []})
    return {"id": "fx%03d" % idx, "split": split, "turns": turns}


def ontology(dialogs):
    onto = {}
    for d in dialogs:
        for t in d["turns"]:
            for item in t["da"]:
                if item["slot"] and item["value"] != "?":
                    key = (item["domain"] + "-" + item["slot"]).lower()
                    vals = onto.setdefault(key, [])
                    if item["value"] not in vals:
                        vals.append(item["value"])
    return {k: sorted(v) for k, v in sorted(onto.items())}


def fixture(seed):
    rng = random.Random(seed)
    splits = ["train"] * 44 + ["validation"] * 4 + ["test"] * 12
    rng.shuffle(splits)
    # 60 dialogs, 200 user turns: 20 dialogs of 4 user turns, 40 of 3.
    lengths = [4] * 20 + [3] * 40
    rng.shuffle(lengths)

    def pick(domain, slot):
        return rng.choice(VALUES[domain + "-" + slot])

    dialogs = [make_dialog(rng, i, s, n, pick)
               for i, (s, n) in enumerate(zip(splits, lengths))]
    return {"dialogs": dialogs, "ontology": ontology(dialogs)}


def mini():
    def user(text, items):
        b = Builder()
        rest = text
        for dom, intent, slot, value in items:
            if slot and value != "?":
                pos = rest.find(value)
                b.add(rest[:pos])
                b.value(dom, intent, slot, value)
                rest = rest[pos + len(value):]
            else:
                b.item(dom, intent, slot, value)
        b.add(rest)
        return b.turn()

    def system(text):
        return {"speaker": "system", "text": text, "da": [], "spans": []}

    # Items with values must be listed in text order.
    dialogs = [
        {"id": "mini-1", "split": "train", "turns": [
            user("I want to go to Cambridge .", [("attraction", "inform", "dest", "Cambridge")]),
            system("What time would you like to arrive?"),
            user("I need to arrive by 20:45 on friday.",
                 [("train", "inform", "arrive", "20:45"), ("train", "inform", "day", "friday")]),
            system("TR1234 arrives at 20:30."),
            user("Thank you, goodbye.", [("general", "thank", "", ""), ("general", "bye", "", "")]),
        ]},
        {"id": "mini-2", "split": "train", "turns": [
            user("I'm leaving from Leicester and should arrive in Cambridge by 13:45.",
                 [("train", "inform", "depart", "Leicester"), ("train", "inform", "dest", "Cambridge"),
                  ("train", "inform", "arrive", "13:45")]),
            system("How many tickets?"),
            user("Book it for 3 people.", [("train", "book", "people", "3")]),
        ]},
        {"id": "mini-3", "split": "validation", "turns": [
            user("I am looking for a cheap hotel in the north.",
                 [("hotel", "inform", "pricerange", "cheap"), ("hotel", "inform", "area", "north")]),
            system("Acorn Guest House is available."),
            user("What is the phone number?", [("hotel", "request", "phone", "?")]),
        ]},
        {"id": "mini-4", "split": "test", "turns": [
            user("Can you find a restaurant serving italian food in the centre?",
                 [("restaurant", "inform", "food", "italian"),
                  ("restaurant", "inform", "area", "centre")]),
            system("Pizza Express fits. Shall I book it?"),
            user("Yes, for 2 people at 18:45 on sunday.",
                 [("restaurant", "book", "people", "2"), ("restaurant", "book", "time", "18:45"),
                  ("restaurant", "book", "day", "sunday")]),
            system("Booked."),
            user("I also need a taxi to the restaurant.", [("taxi", "inform", "", "")]),
        ]},
        {"id": "mini-5", "split": "test", "turns": [
            user("Hello.", [("general", "greet", "", "")]),
            system("Hello, how can I help?"),
            user("I want to visit the Café Müller in the west.",
                 [("attraction", "inform", "name", "Café Müller"),
                  ("attraction", "inform", "area", "west")]),
        ]},
    ]
    return {"dialogs": dialogs}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("--seed", type=int, default=2026)
    args = ap.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    for name, data in [("fixture_corpus.json", fixture(args.seed)), ("mini_corpus.json", mini())]:
        with open(os.path.join(args.out_dir, name), "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, indent=1)
            f.write("\n")


if __name__ == "__main__":
    main()
