// Small inventory helpers used by the diff corpus.
const TAX_RATE = 0.19;

function price(item) {
  return item.net * (1 + TAX_RATE);
}

function total(items) {
  let sum = 0;
  for (const item of items) {
    sum += price(item) * item.count;
  }
  return Math.round(sum * 100) / 100;
}

class Inventory {
  constructor(name) {
    this.name = name;
    this.items = [];
  }

  add(label, net, count = 1) {
    const existing = this.items.find(i => i.label === label);
    if (existing) {
      existing.count += count;
      return existing;
    }
    const item = { label, net, count };
    this.items.push(item);
    return item;
  }

  remove(label) {
    this.items = this.items.filter(i => i.label !== label);
  }

  report() {
    const lines = this.items
      .map(i => `${i.label}: ${i.count} x ${price(i).toFixed(2)}`)
      .join("\n");
    return `${this.name}\n${lines}\ntotal ${total(this.items)}`;
  }
}

const shop = new Inventory("corner shop");
shop.add("apple", 0.3, 12);
shop.add("pear", 0.45, 4);
shop.add("apple", 0.3, 3);
shop.remove("pear");

const cubes = [1, 2, 3, 4].map(n => n ** 3);
const flags = { verbose: false, limit: 10, tags: ["a", "b"] };

if (flags.verbose && cubes.length > flags.limit) {
  console.log(shop.report());
} else {
  console.log(total(shop.items), cubes);
}
